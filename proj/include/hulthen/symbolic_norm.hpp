#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hulthen/errors.hpp"
#include "hulthen/hypergeom.hpp"
#include "hulthen/polynomial.hpp"
#include "hulthen/rational_function.hpp"

namespace hulthen::wavefunction {

using exact::PolyQ;
using exact::Rational;
using exact::RationalFunction;

/// Exact symbolic normalization of the family member n, as functions of the
/// free exponent symbol s:
///
///   1/N_n^2 = integral_0^1 y^{2s} (1-y)^2 F_n(y)^2 dy
///           = sum_j d_j(s) * 2 / ((2s+j+1)(2s+j+2)(2s+j+3)),
///
/// where the d_j are the exact coefficients of F_n^2 (each monomial integral
/// is a Beta value, rational in s). The constant is decomposed as
/// N_n = prefactor(s) * sqrt(radicand(s)) with an integer-coefficient
/// square-free radicand, which is the shape of the printed reference table.
struct SymbolicNorm {
    RationalFunction inv_norm_square; // the integral itself, 1/N^2
    RationalFunction prefactor;
    PolyQ radicand;

    /// N evaluated exactly at rational s, as a double.
    double value(const Rational& s) const {
        Rational inv = inv_norm_square.eval(s);
        if (!(inv.sign() > 0))
            throw std::domain_error("SymbolicNorm: nonpositive norm integral");
        return 1.0 / std::sqrt(inv.to_double());
    }
};

namespace detail {

inline RationalFunction rf_linear(long long c0, long long c1) {
    return RationalFunction(PolyQ::linear(Rational(c0), Rational(c1)));
}

/// 2 / ((2s+j+1)(2s+j+2)(2s+j+3)) as a rational function of s.
inline RationalFunction beta_moment(int j) {
    PolyQ den = PolyQ::linear(Rational(j + 1), Rational(2)) *
                PolyQ::linear(Rational(j + 2), Rational(2)) *
                PolyQ::linear(Rational(j + 3), Rational(2));
    return RationalFunction(PolyQ::constant(Rational(2)), den);
}

} // namespace detail

/// Coefficients of F_n(y) = F(2s+1+n, 1-n, 2s+1; y) in powers of y, each an
/// exact rational function of the symbol s.
inline std::vector<RationalFunction> family_series_symbolic(int n) {
    if (n < 1) throw std::domain_error("family_series_symbolic: n >= 1");
    RationalFunction a = detail::rf_linear(1 + n, 2);
    RationalFunction c = detail::rf_linear(1, 2);
    auto series = hypergeom::build_terminating<RationalFunction>(a, n - 1, c);
    return series.coeffs;
}

/// Exact squared-norm reciprocal plus the prefactor/radicand decomposition.
/// n is capped (default 12) to keep the exact expansion tractable.
inline SymbolicNorm normalize_symbolic(int n, int max_n = 12) {
    if (n < 1) throw std::domain_error("normalize_symbolic: n >= 1");
    if (n > max_n)
        throw capacity_error("normalize_symbolic: n exceeds the exact-expansion cap");

    std::vector<RationalFunction> f = family_series_symbolic(n);

    // d_j = coefficients of F^2
    std::vector<RationalFunction> d(2 * f.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            d[i + j] = d[i + j] + f[i] * f[j];

    RationalFunction integral;
    for (std::size_t j = 0; j < d.size(); ++j)
        integral = integral + d[j] * detail::beta_moment(static_cast<int>(j));

    SymbolicNorm out;
    out.inv_norm_square = integral;

    // N^2 = den(I)/num(I). Pull primitive integer forms, split off the square
    // parts of each polynomial, and extract the largest perfect-square factor
    // of the leftover rational constant.
    exact::PrimitiveForm p = exact::primitive_form(integral.den());
    exact::PrimitiveForm q = exact::primitive_form(integral.num());
    Rational constant = p.factor / q.factor;
    if (!(constant.sign() > 0))
        throw std::domain_error("normalize_symbolic: negative norm square");

    exact::SquareFreeSplit ps = exact::squarefree_split(p.primitive);
    exact::SquareFreeSplit qs = exact::squarefree_split(q.primitive);
    // leading coefficients lost by monic-normalized Yun
    Rational lead = p.primitive.is_zero() ? Rational(1) : p.primitive.leading();
    Rational leadq = q.primitive.is_zero() ? Rational(1) : q.primitive.leading();
    constant = constant * lead / leadq;

    PolyQ radicand_monic = ps.radical * qs.radical;
    exact::PrimitiveForm rad = exact::primitive_form(radicand_monic);
    constant = constant * rad.factor;

    exact::SquareSplit split = exact::split_square(constant);
    PolyQ radicand = rad.primitive;
    if (!split.remainder.is_one()) {
        // fold the non-square integer leftover into the radicand (the
        // radicand then carries that content; the table rows never hit this)
        radicand = radicand * split.remainder;
    }
    out.prefactor =
        RationalFunction(ps.square_part * split.root, qs.square_part * qs.radical);
    out.radicand = radicand;
    return out;
}

/// The four printed reference rows: N_n = prefactor(s) * sqrt(radicand(s)).
struct ReferenceNorm {
    int n;
    RationalFunction prefactor;
    PolyQ radicand;

    double value(double s) const {
        double rad = 0.0;
        for (std::size_t i = radicand.coeffs().size(); i-- > 0;)
            rad = rad * s + radicand.coeffs()[i].to_double();
        return prefactor.eval_double(s) * std::sqrt(rad);
    }
};

/// Closed-form normalization constants for n = 1..4 (the reference table the
/// `table1` verification suite checks against).
inline ReferenceNorm reference_norm(int n) {
    auto poly = [](std::initializer_list<long long> cs) {
        std::vector<Rational> v;
        for (long long c : cs) v.emplace_back(c);
        return PolyQ(std::move(v));
    };
    switch (n) {
        case 1:
            return {1, RationalFunction(Rational(1)), poly({3, 11, 12, 4})};
        case 2:
            return {2,
                    RationalFunction(PolyQ({Rational(1, 2), Rational(1)})),
                    poly({30, 47, 24, 4})};
        case 3:
            return {3,
                    RationalFunction(
                        PolyQ({Rational(1, 3), Rational(1), Rational(2, 3)})),
                    poly({105, 107, 36, 4})};
        case 4:
            return {4,
                    RationalFunction(PolyQ({Rational(1, 4), Rational(11, 12),
                                            Rational(1), Rational(1, 3)})),
                    poly({252, 191, 48, 4})};
        default:
            throw std::domain_error("reference_norm: table has rows 1..4");
    }
}

} // namespace hulthen::wavefunction
