#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hulthen/errors.hpp"
#include "hulthen/rational.hpp"
#include "hulthen/wavefunction.hpp"

namespace hulthen::ladder {

using wavefunction::FamilyState;
using wavefunction::GridFunction;

// ---------------------------------------------------------------------------
// The raising/lowering operators restricted to the fixed-s family:
//
//   L+ = [y(1-y) d/dy + y - s(1-y) - (1-y)(2s+n+1) T+(y)] (2s+2n+1)/(2s+n+1)
//   L- = [-y(1-y) d/dy - y + s(1-y) + (1-y)(n-1) T-(y)] (2s+2n-1)/(n-1)
//
// with T+(y) = (n+1)/((1-y)(2s+2n+1)) - 1 and
//      T-(y) = 1 - (2s+n-1)/((1-y)(2s+2n-1)).
//
// The n in the coefficients is number-operator-valued: applying an operator
// uses the level of the state it acts on, and compositions re-evaluate the
// coefficients after every step. Acting on psi_n:
//   L+ psi_n = l+ psi_{n+1},  l+ = (2s+n) N_n/N_{n+1}
//   L- psi_n = l- psi_{n-1},  l- =      n N_n/N_{n-1}   (n >= 2)
// and L- psi_1 = 0 by the lowest-weight convention (the printed operator is
// singular at n = 1).
// ---------------------------------------------------------------------------

namespace detail {

// c+(y): the multiplier of g in L+ g = C+ [y(1-y) g' + c+(y) g]
inline double raise_c(double s, int n, double y) {
    double A = (2.0 * s + n + 1.0) * (n + 1.0) / (2.0 * s + 2.0 * n + 1.0);
    return y - A + (1.0 - y) * (s + n + 1.0);
}

// c-(y): the multiplier of g in L- g = C- [-y(1-y) g' + c-(y) g]
inline double lower_c(double s, int n, double y) {
    double B = (n - 1.0) * (2.0 * s + n - 1.0) / (2.0 * s + 2.0 * n - 1.0);
    return -y + (1.0 - y) * (s + n - 1.0) - B;
}

inline double raise_scale(double s, int n) {
    return (2.0 * s + 2.0 * n + 1.0) / (2.0 * s + n + 1.0);
}

inline double lower_scale(double s, int n) {
    return (2.0 * s + 2.0 * n - 1.0) / (n - 1.0);
}

inline void require_interior(const std::vector<double>& grid) {
    for (double y : grid)
        if (!(y > 0.0 && y < 1.0))
            throw std::domain_error(
                "ladder: grid must stay strictly inside (0, 1)");
}

} // namespace detail

/// Value and first derivative of a function at one point; the first-order
/// ladder operators need nothing more, which is what makes composition by
/// repeated application possible.
struct Jet {
    double g = 0.0;
    double dg = 0.0;
};

/// L+ at level n applied to (g, g') at y; returns the new value and, using
/// g'', the new derivative so the result can be fed to another operator.
inline Jet apply_raise_jet(double s, int n, double y, double g, double dg,
                           double d2g) {
    double C = detail::raise_scale(s, n);
    double c = detail::raise_c(s, n, y);
    Jet out;
    out.g = C * (y * (1.0 - y) * dg + c * g);
    // d/dy of the bracket; c'(y) = -(s+n)
    out.dg = C * (y * (1.0 - y) * d2g + (1.0 - 2.0 * y + c) * dg -
                  (s + static_cast<double>(n)) * g);
    return out;
}

inline Jet apply_lower_jet(double s, int n, double y, double g, double dg,
                           double d2g) {
    if (n < 2)
        throw std::domain_error("apply_lower_jet: defined for n >= 2 only");
    double C = detail::lower_scale(s, n);
    double c = detail::lower_c(s, n, y);
    Jet out;
    out.g = C * (-y * (1.0 - y) * dg + c * g);
    out.dg = C * (-y * (1.0 - y) * d2g + (c - (1.0 - 2.0 * y)) * dg -
                  (s + static_cast<double>(n)) * g);
    return out;
}

/// (L+ psi_n) sampled on an interior grid, computed with the analytic
/// derivative of psi (never finite differences).
inline GridFunction apply_raise(const FamilyState& st,
                                const std::vector<double>& grid) {
    detail::require_interior(grid);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto d = wavefunction::eval_psi_derivs(st, grid[i]);
        vals[i] = apply_raise_jet(st.s, st.n, grid[i], d.psi, d.dpsi, d.d2psi).g;
    }
    return GridFunction(grid, std::move(vals));
}

/// (L- psi_n) sampled on an interior grid. For n = 1 the lowest-weight
/// convention applies and the zero function is returned.
inline GridFunction apply_lower(const FamilyState& st,
                                const std::vector<double>& grid) {
    detail::require_interior(grid);
    std::vector<double> vals(grid.size(), 0.0);
    if (st.n >= 2) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            auto d = wavefunction::eval_psi_derivs(st, grid[i]);
            vals[i] =
                apply_lower_jet(st.s, st.n, grid[i], d.psi, d.dpsi, d.d2psi).g;
        }
    }
    return GridFunction(grid, std::move(vals));
}

// ---------------------------------------------------------------------------
// Eigen-factors and the scalar algebra
// ---------------------------------------------------------------------------

struct NormContext {
    std::optional<double> prev; // N_{n-1}, not needed when n = 1
    double current = 1.0;       // N_n
    std::optional<double> next; // N_{n+1}
};

/// Norms for levels n-1, n, n+1 by quadrature (prev omitted at n = 1).
inline NormContext norms_for(double s, int n) {
    NormContext ctx;
    if (n >= 2) ctx.prev = wavefunction::normalize_quadrature(s, n - 1);
    ctx.current = wavefunction::normalize_quadrature(s, n);
    ctx.next = wavefunction::normalize_quadrature(s, n + 1);
    return ctx;
}

struct LadderCoeffs {
    double l_plus = 0.0;
    double l_minus = 0.0; // 0 at n = 1 by the lowest-weight convention
    double l_zero = 0.0;
    double s = 0.0;
    int n = 0;
};

inline LadderCoeffs ladder_coeffs(double s, int n, const NormContext& norms) {
    if (n < 1) throw std::domain_error("ladder_coeffs: n >= 1");
    if (!norms.next)
        throw capacity_error("ladder_coeffs: N_{n+1} missing from context");
    if (n >= 2 && !norms.prev)
        throw capacity_error("ladder_coeffs: N_{n-1} missing from context");
    if (!(norms.current > 0.0) || !(*norms.next > 0.0) ||
        (norms.prev && !(*norms.prev > 0.0)))
        throw std::domain_error("ladder_coeffs: norms must be positive");
    LadderCoeffs lc;
    lc.s = s;
    lc.n = n;
    lc.l_plus = (2.0 * s + n) * norms.current / *norms.next;
    lc.l_minus = n >= 2 ? n * norms.current / *norms.prev : 0.0;
    lc.l_zero = static_cast<double>(n) + s;
    return lc;
}

/// Scalar composition l+(n) l-(n+1) - l-(n) l+(n-1). The norm ratios cancel,
/// leaving (2s+n)(n+1) - n(2s+n-1) = 2(n+s).
inline double commutator_scalar(double s, int n) {
    if (n < 2) throw std::domain_error("commutator_scalar: n >= 2");
    return (2.0 * s + n) * (n + 1.0) - n * (2.0 * s + n - 1.0);
}

/// Exact-rational version of the same composition.
inline exact::Rational commutator_scalar_exact(const exact::Rational& s, int n) {
    using exact::Rational;
    if (n < 2) throw std::domain_error("commutator_scalar_exact: n >= 2");
    Rational two(2), nn(n);
    return (two * s + nn) * (nn + Rational(1)) - nn * (two * s + nn - Rational(1));
}

/// ([L-, L+] psi_n) / psi_n by composed grid application (operators applied
/// in sequence with their level-dependent coefficients re-evaluated), fitted
/// as a single scalar over the grid. Must equal 2(n+s).
inline double commutator_eigenvalue(double s, int n,
                                    const std::vector<double>& grid) {
    if (n < 2) throw std::domain_error("commutator_eigenvalue: n >= 2");
    detail::require_interior(grid);
    FamilyState st = wavefunction::make_state(s, n);
    double num = 0.0, den = 0.0;
    for (double y : grid) {
        auto d = wavefunction::eval_psi_derivs(st, y);
        Jet up = apply_raise_jet(s, n, y, d.psi, d.dpsi, d.d2psi);
        double down_up = apply_lower_jet(s, n + 1, y, up.g, up.dg, 0.0).g;
        // the second derivative entering the jet is only needed for a further
        // composition; the value uses (g, g') alone, so pass what we have
        Jet dn = apply_lower_jet(s, n, y, d.psi, d.dpsi, d.d2psi);
        double up_down = apply_raise_jet(s, n - 1, y, dn.g, dn.dg, 0.0).g;
        double h = down_up - up_down;
        num += h * d.psi;
        den += d.psi * d.psi;
    }
    if (!(den > 0.0))
        throw numerics_error("commutator_eigenvalue: degenerate grid", 0.0);
    return num / den;
}

inline double commutator_eigenvalue(double s, int n) {
    auto grid =
        wavefunction::build_grid(wavefunction::GridSpec::uniform_y(200, 0.005, 0.995));
    return commutator_eigenvalue(s, n, grid);
}

// ---------------------------------------------------------------------------
// Suite-level check of the full commutation table
// ---------------------------------------------------------------------------

struct Su2Check {
    int n = 0;
    double raise_shift_residual = 0.0;  // [L0, L+] = L+ as scalars
    double lower_shift_residual = 0.0;  // [L0, L-] = -L- as scalars
    double commutator_scalar_residual = 0.0;
    double commutator_grid_residual = 0.0;
    bool pass = false;
};

struct Su2Report {
    double s = 0.0;
    double tolerance_scalar = 0.0;
    double tolerance_grid = 0.0;
    std::vector<Su2Check> checks;
    bool pass = false;
};

/// Verifies the commutation relations for n in [n_lo, n_hi] at fixed s:
/// the L0-shift identities and the commutator, both as scalar compositions
/// through the eigen-factors and as composed grid applications.
inline Su2Report su2_relations_check(double s, int n_lo, int n_hi,
                                     double tol_scalar = 1e-10,
                                     double tol_grid = 1e-8) {
    if (n_lo < 2 || n_hi < n_lo)
        throw std::domain_error("su2_relations_check: need 2 <= n_lo <= n_hi");
    Su2Report rep;
    rep.s = s;
    rep.tolerance_scalar = tol_scalar;
    rep.tolerance_grid = tol_grid;
    rep.pass = true;

    std::vector<double> norms(static_cast<std::size_t>(n_hi) + 3, 0.0);
    for (int k = std::max(1, n_lo - 2); k <= n_hi + 1; ++k)
        norms[static_cast<std::size_t>(k)] = wavefunction::normalize_quadrature(s, k);

    auto grid =
        wavefunction::build_grid(wavefunction::GridSpec::uniform_y(200, 0.005, 0.995));

    for (int n = n_lo; n <= n_hi; ++n) {
        Su2Check chk;
        chk.n = n;
        NormContext ctx{norms[static_cast<std::size_t>(n - 1)],
                        norms[static_cast<std::size_t>(n)],
                        norms[static_cast<std::size_t>(n + 1)]};
        LadderCoeffs lc = ladder_coeffs(s, n, ctx);
        // [L0, L+] psi_n = (l0(n+1) - l0(n)) l+ psi_{n+1}; must equal L+ psi_n
        double shift_up = (lc.l_zero + 1.0) - lc.l_zero;
        chk.raise_shift_residual = std::abs((shift_up - 1.0) * lc.l_plus);
        double shift_down = (lc.l_zero - 1.0) - lc.l_zero;
        chk.lower_shift_residual = std::abs((shift_down + 1.0) * lc.l_minus);

        NormContext ctx_up{norms[static_cast<std::size_t>(n)],
                           norms[static_cast<std::size_t>(n + 1)],
                           norms[static_cast<std::size_t>(n + 2)] > 0.0
                               ? norms[static_cast<std::size_t>(n + 2)]
                               : wavefunction::normalize_quadrature(s, n + 2)};
        NormContext ctx_down{
            n - 2 >= 1 ? std::optional<double>(
                             norms[static_cast<std::size_t>(n - 2)])
                       : std::nullopt,
            norms[static_cast<std::size_t>(n - 1)],
            norms[static_cast<std::size_t>(n)]};
        LadderCoeffs lc_up = ladder_coeffs(s, n + 1, ctx_up);
        LadderCoeffs lc_down = ladder_coeffs(s, n - 1, ctx_down);
        double composed = lc.l_plus * lc_up.l_minus - lc.l_minus * lc_down.l_plus;
        double expected = 2.0 * (static_cast<double>(n) + s);
        chk.commutator_scalar_residual =
            std::abs(composed - expected) / std::abs(expected);

        double fitted = commutator_eigenvalue(s, n, grid);
        chk.commutator_grid_residual =
            std::abs(fitted - expected) / std::abs(expected);

        chk.pass = chk.raise_shift_residual <= tol_scalar &&
                   chk.lower_shift_residual <= tol_scalar &&
                   chk.commutator_scalar_residual <= tol_scalar &&
                   chk.commutator_grid_residual <= tol_grid;
        rep.pass = rep.pass && chk.pass;
        rep.checks.push_back(chk);
    }
    return rep;
}

} // namespace hulthen::ladder
