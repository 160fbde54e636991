#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hulthen/hypergeom.hpp"
#include "oracles.hpp"

using namespace hulthen::hypergeom;

TEST_CASE("build_terminating: frozen small cases") {
    auto s0 = build_terminating(7.0, 0, 3.0);
    REQUIRE(s0.coeffs.size() == 1);
    CHECK(s0.coeffs[0] == 1.0);

    auto s1 = build_terminating(4.5, 1, 2.5);
    REQUIRE(s1.coeffs.size() == 2);
    CHECK(s1.coeffs[0] == 1.0);
    CHECK(s1.coeffs[1] == doctest::Approx(-1.8).epsilon(1e-15));
}

TEST_CASE("build_terminating: family case n=3, s=4/3 is degree 2 with the ratio law") {
    double s = 4.0 / 3.0;
    auto ser = family_series(s, 3);
    REQUIRE(ser.degree() == 2);
    CHECK(ser.coeffs[0] == 1.0);
    double a = 2.0 * s + 1.0 + 3.0, c = 2.0 * s + 1.0;
    for (int k = 0; k < 2; ++k) {
        double ratio = (a + k) * (-2.0 + k) / ((c + k) * (k + 1));
        CHECK(ser.coeffs[k + 1] ==
              doctest::Approx(ser.coeffs[k] * ratio).epsilon(1e-14));
    }
}

TEST_CASE("build_terminating agrees with the term-by-term oracle") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> da(0.5, 10.0), dc(0.5, 10.0),
        dy(0.0, 1.0);
    std::uniform_int_distribution<int> dm(0, 8);
    for (int i = 0; i < 400; ++i) {
        double a = da(rng), c = dc(rng), y = dy(rng);
        int m = dm(rng);
        auto ser = build_terminating(a, m, c);
        double horner = eval_2f1(ser, y);
        double oracle = test_oracles::terminating_2f1(a, m, c, y);
        // the series alternates, so normalize by the term magnitudes rather
        // than the (possibly cancelled) value
        double term_scale = 0.0;
        for (int k = 0; k <= m; ++k)
            term_scale += std::abs(ser.coeffs[static_cast<std::size_t>(k)] *
                                   std::pow(y, k));
        CHECK(std::abs(horner - oracle) <= 1e-13 * std::max(1.0, term_scale));
        // coefficients themselves
        for (int k = 0; k <= m; ++k)
            CHECK(ser.coeffs[static_cast<std::size_t>(k)] ==
                  doctest::Approx(test_oracles::series_coefficient(
                                      a, -static_cast<double>(m), c, k))
                      .epsilon(1e-12));
    }
}

TEST_CASE("build_terminating rejects zero denominators, naming the term") {
    CHECK_THROWS_WITH_AS(build_terminating(2.0, 3, -1.0),
                         doctest::Contains("c + 1"), std::domain_error);
    CHECK_THROWS_AS(build_terminating(2.0, 1, 0.0), std::domain_error);
    // c = -(m) is fine: the last used denominator is c + m - 1
    CHECK_NOTHROW(build_terminating(2.0, 1, 1.0));
}

TEST_CASE("eval_2f1: exact values") {
    auto ser = build_terminating(4.5, 1, 2.5);
    CHECK(eval_2f1(ser, 0.0) == 1.0); // exact at 0
    CHECK(eval_2f1(ser, 0.5) == doctest::Approx(0.1).epsilon(1e-15));
    auto cst = build_terminating(7.0, 0, 3.0);
    CHECK(eval_2f1(cst, 0.73) == 1.0);
}

TEST_CASE("derivative_2f1: scale and shift") {
    auto [scale0, sh0] = derivative_2f1(HypParams{4.2, 0, 1.7});
    CHECK(scale0 == 0.0);

    auto [scale1, sh1] = derivative_2f1(HypParams{4.5, 1, 2.5});
    CHECK(scale1 == doctest::Approx(-1.8).epsilon(1e-15));
    CHECK(sh1.a == doctest::Approx(5.5));
    CHECK(sh1.m == 0);
    CHECK(sh1.c == doctest::Approx(3.5));

    // family n=2, s=3/4: the scale is (2s+1+n)(1-n)/(2s+1) = -1.8
    auto p = family_params(0.75, 2);
    auto [scale2, sh2] = derivative_2f1(p);
    CHECK(scale2 == doctest::Approx(-1.8).epsilon(1e-14));

    CHECK_THROWS_AS(derivative_2f1(HypParams{1.0, 2, 0.0}), std::domain_error);
}

TEST_CASE("derivative shift equals the coefficient-wise derivative (property)") {
    std::mt19937 rng(202);
    std::uniform_real_distribution<double> da(0.5, 10.0), dc(0.5, 10.0),
        dy(0.0, 1.0);
    std::uniform_int_distribution<int> dm(1, 6);
    for (int i = 0; i < 60; ++i) {
        double a = da(rng), c = dc(rng);
        int m = dm(rng);
        auto ser = build_terminating(a, m, c);
        auto dcoeffs = test_oracles::poly_derivative(ser.coeffs);
        auto [scale, shifted] = derivative_2f1(ser.params);
        auto sh_ser = build_terminating(shifted.a, shifted.m, shifted.c);
        for (int j = 0; j < 20; ++j) {
            double y = dy(rng);
            double lhs = test_oracles::poly_eval(dcoeffs, y);
            double rhs = scale * eval_2f1(sh_ser, y);
            CHECK(std::abs(lhs - rhs) <=
                  1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("contiguous residuals: fixed points") {
    HypParams p{3.5, 2, 2.0};
    CHECK(std::abs(contiguous_residual_23(p, 0.3)) < 1e-12);
    CHECK(contiguous_residual_23(p, 0.0) == 0.0);
    CHECK(std::abs(contiguous_residual_24(p, 0.42)) < 1e-12);
    CHECK(contiguous_residual_24(p, 0.0) == 0.0);
    CHECK(std::abs(contiguous_residual_25(p, 0.6)) < 1e-12);
}

TEST_CASE("contiguous residuals vanish at random parameters (property)") {
    std::mt19937 rng(303);
    std::uniform_real_distribution<double> da(0.5, 10.0), dc(0.5, 10.0),
        dy(0.02, 0.95);
    std::uniform_int_distribution<int> dm(0, 5);
    for (int i = 0; i < 300; ++i) {
        HypParams p{da(rng), dm(rng), dc(rng)};
        double y = dy(rng);
        double r23 = contiguous_residual_23(p, y) /
                     std::max(1.0, contiguous_scale_23(p, y));
        double r24 = contiguous_residual_24(p, y) /
                     std::max(1.0, contiguous_scale_24(p, y));
        double r25 = contiguous_residual_25(p, y) /
                     std::max(1.0, contiguous_scale_25(p, y));
        CHECK(std::abs(r23) < 1e-12);
        CHECK(std::abs(r24) < 1e-12);
        CHECK(std::abs(r25) < 1e-12);
    }
}

TEST_CASE("non-terminating neighbor evaluation stays inside its domain") {
    // m = 0 makes the b+1 neighbor an infinite series
    HypParams p{2.5, 0, 3.5};
    CHECK(std::abs(contiguous_residual_23(p, 0.5)) < 1e-12);
    CHECK_THROWS_AS(eval_2f1_general(2.5, 1.0, 3.5, 0.99), std::domain_error);
}

TEST_CASE("family_derivative_decomposition: n=1 collapses to zero") {
    // F_1 = 1 has zero derivative, so coef_next*F_2 + coef_same must vanish
    double s = 0.6;
    auto f2 = family_series(s, 2);
    for (double y : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        auto cd = family_derivative_decomposition(1, s, y);
        double v = cd.coef_next * eval_2f1(f2, y) + cd.coef_same;
        CHECK(std::abs(v) < 1e-12 * std::max(1.0, std::abs(cd.coef_same)));
    }
}

TEST_CASE("family_derivative_decomposition matches the derivative route") {
    double s = 0.75;
    int n = 2;
    double y = 0.5;
    auto fn = family_series(s, n);
    auto fn1 = family_series(s, n + 1);
    auto d = test_oracles::poly_derivative(fn.coeffs);
    auto cd = family_derivative_decomposition(n, s, y);
    double lhs = test_oracles::poly_eval(d, y);
    double rhs = cd.coef_next * eval_2f1(fn1, y) + cd.coef_same * eval_2f1(fn, y);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("family_derivative_decomposition property sweep") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> ds(0.05, 3.0), dy(0.05, 0.95);
    std::uniform_int_distribution<int> dn(1, 6);
    for (int i = 0; i < 300; ++i) {
        double s = ds(rng), y = dy(rng);
        int n = dn(rng);
        auto fn = family_series(s, n);
        auto fn1 = family_series(s, n + 1);
        auto d = test_oracles::poly_derivative(fn.coeffs);
        auto cd = family_derivative_decomposition(n, s, y);
        double lhs = test_oracles::poly_eval(d, y);
        double rhs =
            cd.coef_next * eval_2f1(fn1, y) + cd.coef_same * eval_2f1(fn, y);
        double scale = std::abs(cd.coef_next * eval_2f1(fn1, y)) +
                       std::abs(cd.coef_same * eval_2f1(fn, y));
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, scale));
    }
    CHECK_THROWS_AS(family_derivative_decomposition(2, 0.5, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(family_derivative_decomposition(2, 0.5, 1.0),
                    std::domain_error);
}

TEST_CASE("downward decomposition mirrors the upward one") {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> ds(0.05, 3.0), dy(0.05, 0.95);
    std::uniform_int_distribution<int> dn(2, 6);
    for (int i = 0; i < 300; ++i) {
        double s = ds(rng), y = dy(rng);
        int n = dn(rng);
        auto fn = family_series(s, n);
        auto fnm = family_series(s, n - 1);
        auto d = test_oracles::poly_derivative(fn.coeffs);
        auto cd = family_derivative_decomposition_down(n, s, y);
        double lhs = test_oracles::poly_eval(d, y);
        double rhs =
            cd.coef_prev * eval_2f1(fnm, y) + cd.coef_same * eval_2f1(fn, y);
        double scale = std::abs(cd.coef_prev * eval_2f1(fnm, y)) +
                       std::abs(cd.coef_same * eval_2f1(fn, y));
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, scale));
    }
}

// ---------------------------------------------------------------------------
// Exact zero-tolerance forms: with rational parameters every series involved
// terminates, so each identity is a polynomial identity over Q and can be
// checked coefficient by coefficient.
// ---------------------------------------------------------------------------

namespace {

using hulthen::exact::PolyQ;
using hulthen::exact::Rational;

PolyQ series_poly(const Rational& a, int m, const Rational& c) {
    return PolyQ(build_terminating(a, m, c).coeffs);
}

const PolyQ kY = PolyQ::linear(0, 1);
const PolyQ kOneMinusY = PolyQ::linear(1, -1);

} // namespace

TEST_CASE("contiguous relations hold as exact polynomial identities") {
    struct Params {
        Rational a;
        int m;
        Rational c;
    } cases[] = {
        {Rational(7, 2), 4, Rational(5, 3)},
        {Rational(23, 7), 1, Rational(9, 4)},
        {Rational(1, 5), 6, Rational(13, 6)},
    };
    for (const auto& p : cases) {
        Rational b(-p.m);
        PolyQ f = series_poly(p.a, p.m, p.c);
        PolyQ f_a_up = series_poly(p.a + Rational(1), p.m, p.c);
        PolyQ f_b_up = series_poly(p.a, p.m - 1, p.c);
        PolyQ f_a_dn = series_poly(p.a - Rational(1), p.m, p.c);
        PolyQ f_b_dn = series_poly(p.a, p.m + 1, p.c);
        PolyQ f_shift =
            series_poly(p.a + Rational(1), p.m - 1, p.c + Rational(1));

        // (a/c) y F(a+1,b+1,c+1) = F(a,b+1,c) - F(a,b,c)
        PolyQ lhs23 = (p.a / p.c) * (kY * f_shift);
        CHECK(lhs23 == f_b_up - f);

        // (a-b) F - a F(a+1) + b F(b+1) = 0
        PolyQ r24 = (p.a - b) * f - p.a * f_a_up + b * f_b_up;
        CHECK(r24.is_zero());

        // (a-b)(1-y) F + (c-a) F(a-1) - (c-b) F(b-1) = 0
        PolyQ r25 = (p.a - b) * (kOneMinusY * f) + (p.c - p.a) * f_a_dn -
                    (p.c - b) * f_b_dn;
        CHECK(r25.is_zero());
    }
}

TEST_CASE("family derivative decompositions hold as exact polynomial identities") {
    struct Case {
        Rational s;
        int n;
    } cases[] = {{Rational(3, 4), 4}, {Rational(4, 3), 5}, {Rational(1, 2), 2}};
    for (const auto& c : cases) {
        Rational two_s = Rational(2) * c.s;
        auto family = [&](int level) {
            return series_poly(two_s + Rational(1 + level), level - 1,
                               two_s + Rational(1));
        };
        PolyQ fn = family(c.n);
        PolyQ fn_up = family(c.n + 1);
        PolyQ fn_dn = family(c.n - 1);

        // y(1-y)(2s+2n+1) F_n' =
        //   (2s+n+1)(2s+n) F_{n+1} + (2s+n+1)[(n+1) - (1-y)(2s+2n+1)] F_n
        Rational q_up = two_s + Rational(2 * c.n + 1);
        Rational p_up = two_s + Rational(c.n + 1);
        PolyQ lhs_up = q_up * (kY * kOneMinusY * fn.derivative());
        PolyQ rhs_up = p_up * (two_s + Rational(c.n)) * fn_up +
                       p_up * ((PolyQ::constant(Rational(c.n + 1)) -
                                q_up * kOneMinusY) *
                               fn);
        CHECK(lhs_up == rhs_up);

        // y(1-y)(2s+2n-1) F_n' =
        //   -n(n-1) F_{n-1} + (n-1)[(1-y)(2s+2n-1) - (2s+n-1)] F_n
        Rational q_dn = two_s + Rational(2 * c.n - 1);
        PolyQ lhs_dn = q_dn * (kY * kOneMinusY * fn.derivative());
        PolyQ rhs_dn =
            Rational(-c.n * (c.n - 1)) * fn_dn +
            Rational(c.n - 1) *
                ((q_dn * kOneMinusY - PolyQ::constant(two_s + Rational(c.n - 1))) *
                 fn);
        CHECK(lhs_dn == rhs_dn);
    }
}

TEST_CASE("terminating series over exact rationals: ratio law holds exactly") {
    using hulthen::exact::Rational;
    // s = 4/3, n = 3: a = 2s+4 = 20/3, c = 2s+1 = 11/3, m = 2
    Rational s(4, 3);
    Rational a = Rational(2) * s + Rational(4);
    Rational c = Rational(2) * s + Rational(1);
    auto ser = build_terminating(a, 2, c);
    REQUIRE(ser.coeffs.size() == 3);
    CHECK(ser.coeffs[0] == Rational(1));
    for (int k = 0; k < 2; ++k) {
        Rational ratio = (a + Rational(k)) * Rational(k - 2) /
                         ((c + Rational(k)) * Rational(k + 1));
        CHECK(ser.coeffs[k + 1] == ser.coeffs[k] * ratio);
    }
}
