#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulthen/rational.hpp"

namespace hulthen::spectrum {

/// Which quantization convention is in force.
///
/// kPaper fixes the well strength at beta = 1 and uses the printed positive
/// branch s = (n^2-1)/(2n). kGeneralized keeps beta free, s = (beta-n^2)/(2n),
/// under which the closed-form wavefunctions solve the radial equation
/// exactly (a bound state exists only when n^2 < beta).
enum class Mode { kPaper, kGeneralized };

/// Physical coupling of the well: V(r) = -V0 exp(-r/a) / (1 - exp(-r/a)).
/// beta = 2 M V0 a^2 / hbar^2 is the dimensionless well strength; beta = 1 is
/// the paper-mode convention.
struct Coupling {
    double V0 = 1.0;
    double a = 1.0;
    double M = 0.5;
    double hbar = 1.0;

    double beta() const { return 2.0 * M * V0 * a * a / (hbar * hbar); }

    static Coupling paper() { return Coupling{1.0, 1.0, 0.5, 1.0}; }
    static Coupling from_beta(double beta, double V0 = 1.0) {
        if (!(beta > 0.0)) throw std::domain_error("Coupling: beta must be > 0");
        return Coupling{V0, 1.0, beta / (2.0 * V0), 1.0};
    }
};

struct SpectrumEntry {
    int n = 0;
    double s = 0.0;
    double epsilon = 0.0;  // = -s^2
    double E_over_V0 = 0.0;
};

inline void require_valid_n(int n) {
    if (n == 0)
        throw std::domain_error(
            "n = 0 excluded: the would-be state blows up like 1/(1-y) at the "
            "y = 1 boundary");
    if (n < 0) throw std::domain_error("n must be a positive integer");
}

/// s exponent for level n. Paper mode: (n^2-1)/(2n). Generalized mode:
/// (beta-n^2)/(2n), defined only while n^2 < beta.
inline double s_param(int n, Mode mode, double beta = 1.0) {
    require_valid_n(n);
    double nn = static_cast<double>(n);
    if (mode == Mode::kPaper) return (nn * nn - 1.0) / (2.0 * nn);
    if (!(beta > 0.0)) throw std::domain_error("s_param: beta must be > 0");
    if (nn * nn >= beta)
        throw std::domain_error("no bound state: n^2 >= beta for n = " +
                                std::to_string(n));
    return (beta - nn * nn) / (2.0 * nn);
}

/// Exact-rational mirror of s_param for identity tests and exact table work.
inline exact::Rational s_param_exact(int n, Mode mode,
                                     const exact::Rational& beta = exact::Rational(1)) {
    require_valid_n(n);
    long long nn = n;
    if (mode == Mode::kPaper)
        return exact::Rational(nn * nn - 1, 2 * nn);
    if (!(beta.sign() > 0)) throw std::domain_error("s_param: beta must be > 0");
    if (!(exact::Rational(nn * nn) < beta))
        throw std::domain_error("no bound state: n^2 >= beta");
    return (beta - exact::Rational(nn * nn)) / exact::Rational(2 * nn);
}

/// Dimensionless energy epsilon_n = -s^2 (normalized so the n = 1 paper-mode
/// edge prints as 0 rather than -0).
inline double epsilon(int n, Mode mode, double beta = 1.0) {
    double s = s_param(n, mode, beta);
    double v = -(s * s);
    return v == 0.0 ? 0.0 : v;
}

/// E_n in units of V0: -s^2. The physical energy is V0 * energy_over_V0.
inline double energy_over_V0(int n, Mode mode, double beta = 1.0) {
    return epsilon(n, mode, beta);
}

inline double energy(int n, const Coupling& coupling, Mode mode) {
    double beta = mode == Mode::kPaper ? 1.0 : coupling.beta();
    return coupling.V0 * energy_over_V0(n, mode, beta);
}

/// Residual of the quantization condition s + n - sqrt(s^2 + beta); zero
/// exactly when s = (beta - n^2)/(2n). In paper mode (beta = 1) the printed
/// positive branch s = (n^2-1)/(2n) makes this residual nonzero for n >= 2,
/// which documents the sign inconsistency of the printed condition
/// s - sqrt(s^2+1) = -n against the positive-s wavefunctions.
inline double quantization_residual(double s, int n, double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("quantization_residual: beta must be > 0");
    return s + static_cast<double>(n) - std::sqrt(s * s + beta);
}

/// Number of bound states in generalized mode: the largest n >= 1 with
/// n^2 < beta (zero when none).
inline int bound_state_count(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("bound_state_count: beta must be > 0");
    int k = static_cast<int>(std::floor(std::sqrt(beta)));
    while (k >= 1 && static_cast<double>(k) * k >= beta) --k;
    while (static_cast<double>(k + 1) * (k + 1) < beta) ++k;
    return k < 0 ? 0 : k;
}

inline SpectrumEntry entry(int n, Mode mode, double beta = 1.0) {
    SpectrumEntry e;
    e.n = n;
    e.s = s_param(n, mode, beta);
    e.epsilon = -(e.s * e.s);
    e.E_over_V0 = e.epsilon;
    return e;
}

inline std::vector<SpectrumEntry> entries(int n_lo, int n_hi, Mode mode,
                                          double beta = 1.0) {
    std::vector<SpectrumEntry> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (mode == Mode::kGeneralized &&
            static_cast<double>(n) * n >= beta)
            continue;
        out.push_back(entry(n, mode, beta));
    }
    return out;
}

} // namespace hulthen::spectrum
