#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hulthen/ladder.hpp"
#include "hulthen/wavefunction.hpp"

using namespace hulthen::ladder;
using namespace hulthen::wavefunction;
using hulthen::exact::Rational;

namespace {

std::vector<double> interior_grid(int count = 200) {
    return build_grid(GridSpec::uniform_y(count, 0.005, 0.995));
}

double raise_residual(double s, int n, const std::vector<double>& grid) {
    auto st = make_state(s, n);
    auto up = make_state(s, n + 1);
    double l_plus = (2.0 * s + n) * st.norm / up.norm;
    auto applied = apply_raise(st, grid);
    double max_diff = 0.0, max_up = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double target = l_plus * eval_psi(up, grid[i]);
        max_diff = std::max(max_diff, std::abs(applied.values[i] - target));
        max_up = std::max(max_up, std::abs(eval_psi(up, grid[i])));
    }
    return max_diff / max_up;
}

double lower_residual(double s, int n, const std::vector<double>& grid) {
    auto st = make_state(s, n);
    auto dn = make_state(s, n - 1);
    double l_minus = n * st.norm / dn.norm;
    auto applied = apply_lower(st, grid);
    double max_diff = 0.0, max_dn = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double target = l_minus * eval_psi(dn, grid[i]);
        max_diff = std::max(max_diff, std::abs(applied.values[i] - target));
        max_dn = std::max(max_dn, std::abs(eval_psi(dn, grid[i])));
    }
    return max_diff / max_dn;
}

} // namespace

TEST_CASE("raising action: L+ psi_n = l+ psi_{n+1} pointwise") {
    auto grid = interior_grid();
    CHECK(raise_residual(0.75, 1, grid) < 1e-9);
    CHECK(raise_residual(2.0, 3, grid) < 1e-9);
    for (double s : {0.5, 0.75, 4.0 / 3.0, 2.0})
        for (int n = 1; n <= 6; ++n)
            CHECK(raise_residual(s, n, grid) < 1e-9);
}

TEST_CASE("lowering action: L- psi_n = l- psi_{n-1} pointwise") {
    auto grid = interior_grid();
    CHECK(lower_residual(0.75, 2, grid) < 1e-9);
    CHECK(lower_residual(1.5, 4, grid) < 1e-9);
    for (double s : {0.5, 0.75, 4.0 / 3.0, 2.0})
        for (int n = 2; n <= 6; ++n)
            CHECK(lower_residual(s, n, grid) < 1e-9);
}

TEST_CASE("lowest-weight convention: L- on n=1 is the zero function") {
    auto grid = interior_grid(50);
    auto st = make_state(1.234, 1);
    auto res = apply_lower(st, grid);
    for (double v : res.values) CHECK(v == 0.0);
}

TEST_CASE("grids touching the endpoints are rejected") {
    auto st = make_state(0.75, 2);
    std::vector<double> bad = {0.0, 0.5, 0.9};
    CHECK_THROWS_AS(apply_raise(st, bad), std::domain_error);
    std::vector<double> bad2 = {0.1, 0.5, 1.0};
    CHECK_THROWS_AS(apply_lower(st, bad2), std::domain_error);
}

TEST_CASE("derivative reconstruction from the neighbor decomposition") {
    auto grid = interior_grid();
    for (double s : {0.5, 0.75, 4.0 / 3.0, 2.0}) {
        for (int n = 1; n <= 6; ++n) {
            auto st = make_state(s, n);
            auto up = make_state(s, n + 1);
            double worst = 0.0;
            for (double y : grid) {
                auto d = eval_psi_derivs(st, y);
                auto cd = hulthen::hypergeom::family_derivative_decomposition(
                    n, s, y);
                double same = (s / y - 1.0 / (1.0 - y) + cd.coef_same) * d.psi;
                double next =
                    cd.coef_next * st.norm / up.norm * eval_psi(up, y);
                // relative to the local term scale: the identity's terms grow
                // like 1/(1-y) near the right edge
                double scale = std::abs(same) + std::abs(next) + std::abs(d.dpsi);
                worst = std::max(worst,
                                 std::abs(d.dpsi - (same + next)) / scale);
            }
            CHECK(worst < 1e-10);
        }
    }
}

TEST_CASE("ladder_coeffs: frozen values and the norm context rules") {
    double s = 0.75;
    auto ctx1 = norms_for(s, 1);
    auto lc1 = ladder_coeffs(s, 1, ctx1);
    CHECK(lc1.l_zero == doctest::Approx(1.75));
    CHECK(lc1.l_minus == 0.0);

    auto ctx2 = norms_for(s, 2);
    auto lc2 = ladder_coeffs(s, 2, ctx2);
    CHECK(lc2.l_plus ==
          doctest::Approx(3.5 * ctx2.current / *ctx2.next).epsilon(1e-14));
    CHECK(lc2.l_minus ==
          doctest::Approx(2.0 * ctx2.current / *ctx2.prev).epsilon(1e-14));

    NormContext missing{std::nullopt, 1.0, 2.0};
    CHECK_THROWS_AS(ladder_coeffs(s, 2, missing), hulthen::capacity_error);
    NormContext no_next{1.0, 1.0, std::nullopt};
    CHECK_THROWS_AS(ladder_coeffs(s, 2, no_next), hulthen::capacity_error);
}

TEST_CASE("commutator eigenvalue: scalar composition and frozen values") {
    CHECK(commutator_scalar(0.75, 2) == doctest::Approx(5.5));
    CHECK(commutator_scalar_exact(Rational(4, 3), 3) == Rational(26, 3));
    for (int n = 2; n <= 8; ++n) {
        Rational s(7, 5);
        CHECK(commutator_scalar_exact(s, n) ==
              Rational(2) * (Rational(n) + s));
    }
}

TEST_CASE("commutator eigenvalue: composed grid application") {
    CHECK(commutator_eigenvalue(0.75, 2) == doctest::Approx(5.5).epsilon(1e-8));
    CHECK(commutator_eigenvalue(4.0 / 3.0, 3) ==
          doctest::Approx(26.0 / 3.0).epsilon(1e-8));
    for (double s : {0.5, 2.0})
        for (int n = 2; n <= 6; ++n)
            CHECK(commutator_eigenvalue(s, n) ==
                  doctest::Approx(2.0 * (n + s)).epsilon(1e-8));
    CHECK_THROWS_AS(commutator_eigenvalue(0.75, 1), std::domain_error);
}

TEST_CASE("commutator is invariant under rescaling the norms") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> f(0.05, 20.0);
    double s = 0.9;
    for (int n = 2; n <= 6; ++n) {
        double base = commutator_scalar(s, n);
        for (int trial = 0; trial < 20; ++trial) {
            double np = f(rng), nc = f(rng), nn = f(rng);
            double lp_n = (2.0 * s + n) * nc / nn;
            double lm_n1 = (n + 1.0) * nn / nc;
            double lm_n = n * nc / np;
            double lp_n1 = (2.0 * s + n - 1.0) * np / nc;
            double composed = lp_n * lm_n1 - lm_n * lp_n1;
            CHECK(composed == doctest::Approx(base).epsilon(1e-12));
        }
    }
}

TEST_CASE("su2 relations report") {
    auto rep = su2_relations_check(0.75, 2, 6);
    CHECK(rep.pass);
    REQUIRE(rep.checks.size() == 5);
    for (const auto& c : rep.checks) {
        CHECK(c.raise_shift_residual == 0.0); // (l0(n+1)-l0(n)-1) l+ is exact
        CHECK(c.lower_shift_residual == 0.0);
        CHECK(c.commutator_scalar_residual < 1e-10);
        CHECK(c.commutator_grid_residual < 1e-8);
    }
    // [L0, L-] eigenvalue ratio is -1 whenever l- is nonzero
    auto ctx = norms_for(0.5, 3);
    auto lc = ladder_coeffs(0.5, 3, ctx);
    double ratio = ((lc.l_zero - 1.0) - lc.l_zero) * lc.l_minus / lc.l_minus;
    CHECK(ratio == doctest::Approx(-1.0));
}
