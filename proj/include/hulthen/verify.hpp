#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hulthen/hypergeom.hpp"
#include "hulthen/ladder.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/symbolic_norm.hpp"
#include "hulthen/tolerances.hpp"
#include "hulthen/wavefunction.hpp"

#include "json.hpp"

namespace hulthen::verify {

/// Result of one verification case. expected_failure marks checks that are
/// shipped as documented failures (the paper-mode radial residual): they
/// count as passing when they fail as documented.
struct CheckResult {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool expected_failure = false;
};

struct Report {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// fixed seed: the suites must be deterministic run to run
inline constexpr unsigned kSuiteSeed = 20240817u;

namespace detail {

inline std::string fmt_s(double s) {
    // short deterministic label for case names
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", s);
    return buf;
}

} // namespace detail

// ---------------------------------------------------------------------------
// contiguous: the four series identities plus the family derivative split
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_contiguous(const Tolerances& tol,
                                               int draws = 120,
                                               unsigned seed = kSuiteSeed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> draw_a(0.5, 10.0);
    std::uniform_real_distribution<double> draw_c(0.5, 10.0);
    std::uniform_int_distribution<int> draw_m(0, 6);
    std::uniform_real_distribution<double> draw_y(0.02, 0.95);

    double worst22 = 0.0, worst23 = 0.0, worst24 = 0.0, worst25 = 0.0;
    for (int i = 0; i < draws; ++i) {
        double a = draw_a(rng), c = draw_c(rng), y = draw_y(rng);
        int m = draw_m(rng);
        hypergeom::HypParams p{a, m, c};

        // derivative shift: coefficient-wise derivative of the polynomial
        // against scale * shifted series
        auto series = hypergeom::build_terminating(a, m, c);
        double dpoly = 0.0;
        for (std::size_t k = series.coeffs.size(); k-- > 1;)
            dpoly = dpoly * y + static_cast<double>(k) * series.coeffs[k];
        auto [scale, shifted] = hypergeom::derivative_2f1(p);
        double dshift = 0.0;
        if (m >= 1) {
            auto shifted_series =
                hypergeom::build_terminating(shifted.a, shifted.m, shifted.c);
            dshift = scale * hypergeom::eval_2f1(shifted_series, y);
        }
        worst22 = std::max(worst22, std::abs(dpoly - dshift) /
                                        std::max(1.0, std::abs(dpoly)));

        worst23 = std::max(worst23, std::abs(hypergeom::contiguous_residual_23(p, y)) /
                                        std::max(1.0, hypergeom::contiguous_scale_23(p, y)));
        worst24 = std::max(worst24, std::abs(hypergeom::contiguous_residual_24(p, y)) /
                                        std::max(1.0, hypergeom::contiguous_scale_24(p, y)));
        worst25 = std::max(worst25, std::abs(hypergeom::contiguous_residual_25(p, y)) /
                                        std::max(1.0, hypergeom::contiguous_scale_25(p, y)));
    }

    // family derivative split against the coefficient-wise derivative
    std::uniform_real_distribution<double> draw_s(0.05, 3.0);
    std::uniform_int_distribution<int> draw_n(1, 6);
    std::uniform_real_distribution<double> draw_yf(0.05, 0.95);
    double worst_family = 0.0;
    for (int i = 0; i < draws; ++i) {
        double s = draw_s(rng), y = draw_yf(rng);
        int n = draw_n(rng);
        auto fn = hypergeom::family_series(s, n);
        auto fn1 = hypergeom::family_series(s, n + 1);
        double dpoly = 0.0;
        for (std::size_t k = fn.coeffs.size(); k-- > 1;)
            dpoly = dpoly * y + static_cast<double>(k) * fn.coeffs[k];
        auto cd = hypergeom::family_derivative_decomposition(n, s, y);
        double rhs = cd.coef_next * hypergeom::eval_2f1(fn1, y) +
                     cd.coef_same * hypergeom::eval_2f1(fn, y);
        double scale = std::abs(cd.coef_next * hypergeom::eval_2f1(fn1, y)) +
                       std::abs(cd.coef_same * hypergeom::eval_2f1(fn, y));
        worst_family = std::max(
            worst_family, std::abs(dpoly - rhs) / std::max(1.0, scale));
    }

    std::vector<CheckResult> out;
    out.push_back({"contiguous", "derivative_parameter_shift", worst22,
                   tol.contiguous_identity, worst22 <= tol.contiguous_identity});
    out.push_back({"contiguous", "b_raise_difference", worst23,
                   tol.contiguous_identity, worst23 <= tol.contiguous_identity});
    out.push_back({"contiguous", "a_raise_b_raise_balance", worst24,
                   tol.contiguous_identity, worst24 <= tol.contiguous_identity});
    out.push_back({"contiguous", "a_lower_b_lower_balance", worst25,
                   tol.contiguous_identity, worst25 <= tol.contiguous_identity});
    out.push_back({"contiguous", "family_derivative_split", worst_family,
                   tol.family_identity, worst_family <= tol.family_identity});
    return out;
}

// ---------------------------------------------------------------------------
// ladder: raising/lowering actions and the derivative reconstruction
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_ladder(const Tolerances& tol) {
    const double svals[] = {0.5, 0.75, 4.0 / 3.0, 2.0};
    auto grid = wavefunction::build_grid(
        wavefunction::GridSpec::uniform_y(200, 0.005, 0.995));

    std::vector<CheckResult> out;
    for (double s : svals) {
        std::vector<wavefunction::FamilyState> states;
        for (int n = 1; n <= 7; ++n)
            states.push_back(wavefunction::make_state(s, n));

        double worst_raise = 0.0, worst_lower = 0.0, worst_recon = 0.0;
        for (int n = 1; n <= 6; ++n) {
            const auto& st = states[static_cast<std::size_t>(n - 1)];
            const auto& up = states[static_cast<std::size_t>(n)];
            double l_plus = (2.0 * s + n) * st.norm / up.norm;
            auto raised = ladder::apply_raise(st, grid);
            double max_psi_up = 0.0, max_diff = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                double target = l_plus * wavefunction::eval_psi(up, grid[i]);
                max_diff = std::max(max_diff, std::abs(raised.values[i] - target));
                max_psi_up = std::max(max_psi_up,
                                      std::abs(wavefunction::eval_psi(up, grid[i])));
            }
            worst_raise = std::max(worst_raise, max_diff / max_psi_up);

            if (n >= 2) {
                const auto& dn = states[static_cast<std::size_t>(n - 2)];
                double l_minus = n * st.norm / dn.norm;
                auto lowered = ladder::apply_lower(st, grid);
                double max_psi_dn = 0.0, max_diff_dn = 0.0;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    double target = l_minus * wavefunction::eval_psi(dn, grid[i]);
                    max_diff_dn =
                        std::max(max_diff_dn, std::abs(lowered.values[i] - target));
                    max_psi_dn = std::max(
                        max_psi_dn, std::abs(wavefunction::eval_psi(dn, grid[i])));
                }
                worst_lower = std::max(worst_lower, max_diff_dn / max_psi_dn);
            }

            // derivative reconstruction: analytic d(psi_n)/dy against the
            // decomposition over psi_n and psi_{n+1}, relative to the local
            // term scale (the terms grow like 1/(1-y) near the right edge)
            for (double y : grid) {
                auto d = wavefunction::eval_psi_derivs(st, y);
                auto cd = hypergeom::family_derivative_decomposition(n, s, y);
                double same = (s / y - 1.0 / (1.0 - y) + cd.coef_same) * d.psi;
                double next = cd.coef_next * st.norm / up.norm *
                              wavefunction::eval_psi(up, y);
                double scale = std::abs(same) + std::abs(next) + std::abs(d.dpsi);
                worst_recon = std::max(
                    worst_recon, std::abs(d.dpsi - (same + next)) / scale);
            }
        }

        std::string tag = " s=" + detail::fmt_s(s);
        out.push_back({"ladder", "raise_action" + tag, worst_raise,
                       tol.ladder_pointwise, worst_raise <= tol.ladder_pointwise});
        out.push_back({"ladder", "lower_action" + tag, worst_lower,
                       tol.ladder_pointwise, worst_lower <= tol.ladder_pointwise});
        out.push_back({"ladder", "derivative_reconstruction" + tag, worst_recon,
                       tol.derivative_reconstruction,
                       worst_recon <= tol.derivative_reconstruction});
    }

    // lowest-weight convention: L- on n = 1 is the zero function
    auto zero = ladder::apply_lower(wavefunction::make_state(0.75, 1), grid);
    double worst_zero = 0.0;
    for (double v : zero.values) worst_zero = std::max(worst_zero, std::abs(v));
    out.push_back({"ladder", "lowest_weight_convention", worst_zero, 0.0,
                   worst_zero == 0.0});
    return out;
}

// ---------------------------------------------------------------------------
// su2: commutation relations, scalar and grid-level
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_su2(const Tolerances& tol, double s = 0.75,
                                        int n_lo = 2, int n_hi = 6,
                                        unsigned seed = kSuiteSeed) {
    std::vector<CheckResult> out;

    auto rep = ladder::su2_relations_check(s, n_lo, n_hi, tol.su2_scalar,
                                           tol.commutator_grid);
    std::string tag = " s=" + detail::fmt_s(s);
    for (const auto& c : rep.checks) {
        std::string ntag = " n=" + std::to_string(c.n) + tag;
        out.push_back({"su2", "l0_raise_shift" + ntag, c.raise_shift_residual,
                       tol.su2_scalar, c.raise_shift_residual <= tol.su2_scalar});
        out.push_back({"su2", "l0_lower_shift" + ntag, c.lower_shift_residual,
                       tol.su2_scalar, c.lower_shift_residual <= tol.su2_scalar});
        out.push_back({"su2", "commutator_scalar" + ntag,
                       c.commutator_scalar_residual, tol.su2_scalar,
                       c.commutator_scalar_residual <= tol.su2_scalar});
        out.push_back({"su2", "commutator_grid" + ntag,
                       c.commutator_grid_residual, tol.commutator_grid,
                       c.commutator_grid_residual <= tol.commutator_grid});
    }

    // exact rational composition at rational s
    bool exact_ok = true;
    exact::Rational sq(3, 4);
    for (int n = n_lo; n <= n_hi; ++n) {
        exact::Rational lhs = ladder::commutator_scalar_exact(sq, n);
        exact::Rational rhs =
            exact::Rational(2) * (exact::Rational(n) + sq);
        exact_ok = exact_ok && (lhs == rhs);
    }
    out.push_back({"su2", "commutator_scalar_exact s=3/4", exact_ok ? 0.0 : 1.0,
                   0.0, exact_ok});

    // norm independence: the composed scalar is invariant under rescaling
    // every N_n by arbitrary positive factors
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> factor(0.1, 10.0);
    double worst_inv = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        double f_prev = factor(rng), f_cur = factor(rng), f_next = factor(rng);
        auto lp = [&](double nn, double n_cur, double n_next) {
            return (2.0 * s + nn) * n_cur / n_next;
        };
        auto lm = [&](double nn, double n_cur, double n_prev) {
            return nn * n_cur / n_prev;
        };
        double base = lp(n, 1.0, 1.0) * lm(n + 1, 1.0, 1.0) -
                      lm(n, 1.0, 1.0) * lp(n - 1, 1.0, 1.0);
        double pert = lp(n, f_cur, f_next) * lm(n + 1, f_next, f_cur) -
                      lm(n, f_cur, f_prev) * lp(n - 1, f_prev, f_cur);
        worst_inv =
            std::max(worst_inv, std::abs(pert - base) / std::abs(base));
    }
    out.push_back({"su2", "norm_independence" + tag, worst_inv, tol.su2_scalar,
                   worst_inv <= tol.su2_scalar});
    return out;
}

// ---------------------------------------------------------------------------
// ode: residuals of the closed forms in the radial equation
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_ode(const Tolerances& tol,
                                        bool include_generalized = true,
                                        bool include_paper = true) {
    std::vector<CheckResult> out;
    auto grid = wavefunction::build_grid(
        wavefunction::GridSpec::uniform_y(200, 0.01, 0.99));

    if (include_generalized) {
        struct Case {
            double beta;
            int n;
        } cases[] = {{4.0, 1}, {9.0, 1}, {9.0, 2}};
        for (auto c : cases) {
            double s = spectrum::s_param(c.n, spectrum::Mode::kGeneralized, c.beta);
            auto st = wavefunction::make_state(s, c.n);
            double res = oracle::ode_residual(st, c.beta, grid);
            out.push_back({"ode",
                           "exact_solution beta=" + detail::fmt_s(c.beta) +
                               " n=" + std::to_string(c.n),
                           res, tol.ode_residual, res <= tol.ode_residual});
        }
    }
    if (include_paper) {
        // the printed positive-s branch does not solve the equation at
        // beta = 1 for n >= 2; shipped as a documented expected failure
        double s = spectrum::s_param(2, spectrum::Mode::kPaper);
        auto st = wavefunction::make_state(s, 2);
        double res = oracle::ode_residual(st, 1.0, grid);
        bool failed_as_documented = res > tol.ode_paper_mode_floor;
        CheckResult cr{"ode", "paper_mode_branch_mismatch n=2", res,
                       tol.ode_paper_mode_floor, failed_as_documented, true};
        out.push_back(cr);
    }
    return out;
}

// ---------------------------------------------------------------------------
// table1: exact reference-table identities and quadrature consistency
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_table1(const Tolerances& tol) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 4; ++n) {
        auto sym = wavefunction::normalize_symbolic(n);
        auto ref = wavefunction::reference_norm(n);
        exact::RationalFunction table_sq =
            ref.prefactor * ref.prefactor * exact::RationalFunction(ref.radicand);
        exact::RationalFunction product = sym.inv_norm_square * table_sq;
        bool equal = product.is_one();
        out.push_back({"table1", "exact_identity n=" + std::to_string(n),
                       equal ? 0.0 : 1.0, 0.0, equal});
    }

    const exact::Rational svals[] = {{1, 2}, {3, 4}, {4, 3}, {2, 1}};
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        auto sym = wavefunction::normalize_symbolic(n);
        for (const auto& sq : svals) {
            double n_sym = sym.value(sq);
            double n_quad = wavefunction::normalize_quadrature(sq.to_double(), n);
            worst = std::max(worst, std::abs(n_sym - n_quad) / n_sym);
        }
    }
    out.push_back({"table1", "quadrature_vs_symbolic n=1..8", worst,
                   tol.norm_consistency, worst <= tol.norm_consistency});
    return out;
}

// ---------------------------------------------------------------------------
// shooting: eigenvalue oracle against the closed forms
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_shooting(const Tolerances& tol) {
    std::vector<CheckResult> out;
    for (double beta : {4.0, 9.0}) {
        oracle::ShootingConfig cfg;
        auto found = oracle::shoot_eigenvalues(beta, cfg);
        int expected_count = spectrum::bound_state_count(beta);
        double worst = 0.0;
        bool count_ok = static_cast<int>(found.size()) == expected_count;
        for (const auto& ev : found) {
            double s = spectrum::s_param(ev.n, spectrum::Mode::kGeneralized, beta);
            double closed = -(s * s);
            worst = std::max(worst,
                             std::abs(ev.epsilon - closed) / std::abs(closed));
        }
        out.push_back({"shooting",
                       "closed_form beta=" + detail::fmt_s(beta), worst,
                       tol.shooting_rel, count_ok && worst <= tol.shooting_rel});
    }
    // beta = 1: no bound state below -1e-6
    oracle::ShootingConfig cfg1;
    cfg1.energy_bracket = {-4.0, -1e-6};
    auto none = oracle::shoot_eigenvalues(1.0, cfg1);
    bool empty_ok = none.empty() && spectrum::bound_state_count(1.0) == 0;
    out.push_back({"shooting", "beta=1 no bound state", empty_ok ? 0.0 : 1.0,
                   0.0, empty_ok});
    return out;
}

// ---------------------------------------------------------------------------
// aggregation and JSON
// ---------------------------------------------------------------------------

inline Report run_suites(const std::vector<std::string>& suites,
                         const Tolerances& tol) {
    Report rep;
    auto wants = [&](const std::string& name) {
        return suites.empty() ||
               std::find(suites.begin(), suites.end(), name) != suites.end();
    };
    auto append = [&](std::vector<CheckResult>&& v) {
        for (auto& c : v) rep.checks.push_back(std::move(c));
    };
    if (wants("contiguous")) append(run_contiguous(tol));
    if (wants("ladder")) append(run_ladder(tol));
    if (wants("su2")) append(run_su2(tol));
    if (wants("ode")) append(run_ode(tol));
    if (wants("table1")) append(run_table1(tol));
    if (wants("shooting")) append(run_shooting(tol));
    return rep;
}

inline nlohmann::ordered_json to_json(const Report& rep) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json item;
        item["suite"] = c.suite;
        item["case"] = c.name;
        item["residual"] = c.residual;
        item["tolerance"] = c.tolerance;
        item["pass"] = c.pass;
        if (c.expected_failure) item["expected_failure"] = true;
        checks.push_back(std::move(item));
    }
    nlohmann::ordered_json root;
    root["checks"] = std::move(checks);
    root["pass"] = rep.pass();
    return root;
}

} // namespace hulthen::verify
