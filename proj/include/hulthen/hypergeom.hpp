#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulthen/errors.hpp"
#include "hulthen/rational.hpp"
#include "hulthen/rational_function.hpp"

namespace hulthen::hypergeom {

/// Parameters of a terminating Gauss series F(a, b, c; y) with b = -m for a
/// nonnegative integer m, so the series is a polynomial of degree m.
template <class Scalar>
struct HypParamsT {
    Scalar a;
    int m = 0; // encodes b = -m
    Scalar c;

    Scalar b() const { return Scalar(-m); }
};

using HypParams = HypParamsT<double>;
using HypParamsQ = HypParamsT<exact::Rational>;

/// Coefficients c_0..c_m of the polynomial F(a, -m, c; y), with c_0 = 1 and
/// c_{k+1}/c_k = (a+k)(-m+k) / ((c+k)(k+1)).
template <class Scalar>
struct TerminatingSeriesT {
    std::vector<Scalar> coeffs;
    HypParamsT<Scalar> params;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

using TerminatingSeries = TerminatingSeriesT<double>;
using TerminatingSeriesQ = TerminatingSeriesT<exact::Rational>;

namespace detail {
inline bool scalar_is_zero(double v) { return v == 0.0; }
inline bool scalar_is_zero(const exact::Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const exact::RationalFunction& v) { return v.is_zero(); }
} // namespace detail

/// Builds the coefficient list of the degree-m polynomial F(a, -m, c; y)
/// through the Pochhammer-ratio recurrence.
template <class Scalar>
TerminatingSeriesT<Scalar> build_terminating(Scalar a, int m, Scalar c) {
    if (m < 0) throw std::domain_error("build_terminating: m must be >= 0");
    TerminatingSeriesT<Scalar> s;
    s.params = {a, m, c};
    s.coeffs.reserve(static_cast<std::size_t>(m) + 1);
    s.coeffs.push_back(Scalar(1));
    Scalar ck(1);
    for (int k = 0; k < m; ++k) {
        Scalar denom = (c + Scalar(k)) * Scalar(k + 1);
        if (detail::scalar_is_zero(c + Scalar(k)))
            throw std::domain_error(
                "build_terminating: zero denominator c + " + std::to_string(k) +
                " while forming term " + std::to_string(k + 1));
        ck = ck * (a + Scalar(k)) * Scalar(k - m) / denom;
        s.coeffs.push_back(ck);
    }
    return s;
}

/// Horner evaluation of a terminating series; exact 1 at y = 0.
template <class Scalar, class X>
X eval_2f1(const TerminatingSeriesT<Scalar>& series, const X& y) {
    X acc(0);
    for (std::size_t i = series.coeffs.size(); i-- > 0;)
        acc = acc * y + X(series.coeffs[i]);
    return acc;
}

/// General-purpose evaluator used by the contiguous-relation residuals. If a
/// or b is a nonpositive integer the sum is finite and exact; otherwise the
/// series is summed with a tail bound below 1e-15, which restricts |y| to
/// stay away from 1.
inline double eval_2f1_general(double a, double b, double c, double y) {
    auto nonpos_int = [](double v) {
        return v <= 0.0 && v == std::floor(v);
    };
    if (nonpos_int(c)) {
        // valid only if the series terminates first
        double stop = nonpos_int(b) ? -b : (nonpos_int(a) ? -a : -1.0);
        if (stop < 0.0 || -c < stop)
            throw std::domain_error(
                "eval_2f1_general: c is a nonpositive integer inside the sum");
    }
    long terms = -1;
    if (nonpos_int(b)) terms = static_cast<long>(-b);
    if (nonpos_int(a)) {
        long ta = static_cast<long>(-a);
        if (terms < 0 || ta < terms) terms = ta;
    }
    if (terms >= 0) {
        double sum = 1.0, t = 1.0;
        for (long k = 0; k < terms; ++k) {
            t *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                 ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * y;
            sum += t;
        }
        return sum;
    }
    if (std::abs(y) > 0.97)
        throw std::domain_error(
            "eval_2f1_general: non-terminating series needs |y| <= 0.97");
    double sum = 1.0, t = 1.0;
    for (long k = 0; k < 200000; ++k) {
        t *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
             ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * y;
        sum += t;
        if (std::abs(t) <= 1e-17 * std::abs(sum) * (1.0 - std::abs(y)))
            return sum;
    }
    throw numerics_error("eval_2f1_general: series did not converge",
                         std::abs(t));
}

/// d/dy F(a, b, c; y) = (a b / c) F(a+1, b+1, c+1; y). Returns the scale and
/// the shifted parameters; for m = 0 the scale is 0 and the shifted
/// parameters are returned with m = 0 (the scaled series is the zero
/// function either way).
template <class Scalar>
std::pair<Scalar, HypParamsT<Scalar>> derivative_2f1(const HypParamsT<Scalar>& p) {
    if (detail::scalar_is_zero(p.c))
        throw std::domain_error("derivative_2f1: c must be nonzero");
    Scalar scale = p.a * Scalar(-p.m) / p.c;
    HypParamsT<Scalar> shifted{p.a + Scalar(1), p.m > 0 ? p.m - 1 : 0,
                               p.c + Scalar(1)};
    return {scale, shifted};
}

// ---------------------------------------------------------------------------
// Contiguous-relation residuals. Each returns LHS - RHS of the identity; the
// identities are exact, so the residual is pure floating-point round-off.
// ---------------------------------------------------------------------------

/// (a/c) y F(a+1, b+1, c+1; y) - [F(a, b+1, c; y) - F(a, b, c; y)]
inline double contiguous_residual_23(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    double lhs = (a / c) * y * eval_2f1_general(a + 1, b + 1, c + 1, y);
    double rhs = eval_2f1_general(a, b + 1, c, y) - eval_2f1_general(a, b, c, y);
    return lhs - rhs;
}

/// (a-b) F(a, b, c; y) - a F(a+1, b, c; y) + b F(a, b+1, c; y)
inline double contiguous_residual_24(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    return (a - b) * eval_2f1_general(a, b, c, y) -
           a * eval_2f1_general(a + 1, b, c, y) +
           b * eval_2f1_general(a, b + 1, c, y);
}

/// (a-b)(1-y) F(a, b, c; y) + (c-a) F(a-1, b, c; y) - (c-b) F(a, b-1, c; y)
inline double contiguous_residual_25(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    return (a - b) * (1.0 - y) * eval_2f1_general(a, b, c, y) +
           (c - a) * eval_2f1_general(a - 1, b, c, y) -
           (c - b) * eval_2f1_general(a, b - 1, c, y);
}

/// Magnitude scale of the terms entering each residual, for relative
/// tolerancing in the verification suites.
inline double contiguous_scale_23(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    return std::abs((a / c) * y * eval_2f1_general(a + 1, b + 1, c + 1, y)) +
           std::abs(eval_2f1_general(a, b + 1, c, y)) +
           std::abs(eval_2f1_general(a, b, c, y));
}

inline double contiguous_scale_24(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    return std::abs((a - b) * eval_2f1_general(a, b, c, y)) +
           std::abs(a * eval_2f1_general(a + 1, b, c, y)) +
           std::abs(b * eval_2f1_general(a, b + 1, c, y));
}

inline double contiguous_scale_25(const HypParams& p, double y) {
    double a = p.a, b = -static_cast<double>(p.m), c = p.c;
    return std::abs((a - b) * (1.0 - y) * eval_2f1_general(a, b, c, y)) +
           std::abs((c - a) * eval_2f1_general(a - 1, b, c, y)) +
           std::abs((c - b) * eval_2f1_general(a, b - 1, c, y));
}

// ---------------------------------------------------------------------------
// The fixed-s family F_n(y) = F(2s+1+n, 1-n, 2s+1; y) and the decompositions
// of its derivative over neighboring members. These are the identities the
// ladder operators are built from.
// ---------------------------------------------------------------------------

template <class Scalar>
HypParamsT<Scalar> family_params(Scalar s, int n) {
    if (n < 1) throw std::domain_error("family_params: n must be >= 1");
    return {Scalar(2) * s + Scalar(1 + n), n - 1, Scalar(2) * s + Scalar(1)};
}

template <class Scalar>
TerminatingSeriesT<Scalar> family_series(Scalar s, int n) {
    auto p = family_params(s, n);
    return build_terminating(p.a, p.m, p.c);
}

struct FamilyDerivativeCoeffs {
    double coef_same; // multiplies F_n
    double coef_next; // multiplies F_{n+1}
};

/// dF_n/dy = coef_next * F_{n+1}(y) + coef_same * F_n(y), valid for
/// y strictly inside (0, 1).
inline FamilyDerivativeCoeffs family_derivative_decomposition(int n, double s,
                                                              double y) {
    if (n < 1) throw std::domain_error("family_derivative_decomposition: n >= 1");
    if (!(y > 0.0 && y < 1.0))
        throw std::domain_error(
            "family_derivative_decomposition: y must lie strictly in (0,1)");
    double q = 2.0 * s + 2.0 * n + 1.0;
    double coef_next = (2.0 * s + n + 1.0) * (2.0 * s + n) / (y * (1.0 - y) * q);
    double coef_same =
        (2.0 * s + n + 1.0) / y * ((n + 1.0) / ((1.0 - y) * q) - 1.0);
    return {coef_same, coef_next};
}

struct FamilyDerivativeCoeffsDown {
    double coef_same; // multiplies F_n
    double coef_prev; // multiplies F_{n-1}
};

/// dF_n/dy = coef_prev * F_{n-1}(y) + coef_same * F_n(y). Both coefficients
/// carry a factor (n-1), so the n = 1 result is identically zero, matching
/// F_1 = 1.
inline FamilyDerivativeCoeffsDown family_derivative_decomposition_down(
    int n, double s, double y) {
    if (n < 1)
        throw std::domain_error("family_derivative_decomposition_down: n >= 1");
    if (!(y > 0.0 && y < 1.0))
        throw std::domain_error(
            "family_derivative_decomposition_down: y must lie strictly in (0,1)");
    double q = 2.0 * s + 2.0 * n - 1.0;
    double coef_prev = -static_cast<double>(n) * (n - 1.0) / (y * (1.0 - y) * q);
    double coef_same =
        (n - 1.0) / y * (1.0 - (2.0 * s + n - 1.0) / ((1.0 - y) * q));
    return {coef_same, coef_prev};
}

} // namespace hulthen::hypergeom
