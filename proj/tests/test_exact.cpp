#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hulthen/bigint.hpp"
#include "hulthen/polynomial.hpp"
#include "hulthen/rational.hpp"
#include "hulthen/rational_function.hpp"

using hulthen::exact::BigInt;
using hulthen::exact::PolyQ;
using hulthen::exact::Rational;
using hulthen::exact::RationalFunction;

TEST_CASE("BigInt round-trips decimal strings") {
    const char* cases[] = {"0",
                           "1",
                           "-1",
                           "4294967296",
                           "-4294967295",
                           "123456789012345678901234567890",
                           "-999999999999999999999999999999999999"};
    for (const char* c : cases) {
        CHECK(BigInt::from_string(c).to_string() == c);
    }
}

TEST_CASE("BigInt arithmetic agrees with 64-bit arithmetic on random draws") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("BigInt multi-limb division reconstructs the dividend") {
    std::mt19937_64 rng(7);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i) {
            v = v * BigInt(4294967296LL) +
                BigInt(static_cast<long long>(rng() & 0xffffffffu));
        }
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_big(6);
        BigInt b = random_big(3);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("BigInt gcd and isqrt") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(36)).to_int64() == 12);
    CHECK(BigInt::gcd(BigInt(-48), BigInt(36)).to_int64() == 12);
    BigInt big = BigInt::from_string("123456789123456789");
    CHECK(BigInt::isqrt(big * big) == big);
    CHECK(BigInt::isqrt(big * big + BigInt(1)) == big);
    CHECK(BigInt::isqrt(big * big - BigInt(1)) == big - BigInt(1));
    CHECK((big * big).is_perfect_square());
    CHECK(!(big * big + BigInt(1)).is_perfect_square());
}

TEST_CASE("Rational reduces and orders") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 8).to_double() == doctest::Approx(0.875));
}

TEST_CASE("Rational square split") {
    auto s = hulthen::exact::split_square(Rational(9, 4));
    CHECK(s.root == Rational(3, 2));
    CHECK(s.remainder == Rational(1));

    auto t = hulthen::exact::split_square(Rational(8, 9));
    // 8/9 = (p/q)^2 * rem with integer rem
    CHECK(t.root * t.root * t.remainder == Rational(8, 9));
    CHECK(t.remainder.is_integer());
}

TEST_CASE("Polynomial division and gcd") {
    // (x-1)(x-2)(x-3) and (x-2)(x-5)
    PolyQ a = PolyQ::linear(-1, 1) * PolyQ::linear(-2, 1) * PolyQ::linear(-3, 1);
    PolyQ b = PolyQ::linear(-2, 1) * PolyQ::linear(-5, 1);
    PolyQ g = PolyQ::gcd(a, b);
    CHECK(g == PolyQ::linear(-2, 1)); // monic x - 2

    PolyQ q, r;
    PolyQ::divmod(a, b, q, r);
    CHECK(q * b + r == a);
}

TEST_CASE("Yun square-free split") {
    // f = (x+1)^2 (x+3) (x+4)^4
    PolyQ f = PolyQ::linear(1, 1) * PolyQ::linear(1, 1) * PolyQ::linear(3, 1);
    PolyQ x4 = PolyQ::linear(4, 1);
    for (int i = 0; i < 4; ++i) f = f * x4;
    auto split = hulthen::exact::squarefree_split(f);
    // square part (x+1)(x+4)^2, radical (x+3)
    PolyQ expect_sq = PolyQ::linear(1, 1) * x4 * x4;
    CHECK(split.square_part == expect_sq);
    CHECK(split.radical == PolyQ::linear(3, 1));
    CHECK(split.square_part * split.square_part * split.radical == f.monic());
}

TEST_CASE("primitive_form scales to content-1 integer coefficients") {
    PolyQ f({Rational(3, 2), Rational(9, 4), Rational(3)});
    auto pf = hulthen::exact::primitive_form(f);
    CHECK(pf.primitive == PolyQ({Rational(2), Rational(3), Rational(4)}));
    CHECK(pf.factor == Rational(3, 4));
    // reconstruct
    PolyQ back = pf.primitive * pf.factor;
    CHECK(back == f);
}

TEST_CASE("RationalFunction reduces common factors") {
    // (x^2-1)/(x-1) = x+1
    PolyQ num = PolyQ({Rational(-1), Rational(0), Rational(1)});
    PolyQ den = PolyQ::linear(-1, 1);
    RationalFunction rf(num, den);
    CHECK(rf.num() == PolyQ::linear(1, 1));
    CHECK(rf.den() == PolyQ::constant(Rational(1)));

    RationalFunction a(PolyQ::linear(0, 1)); // x
    RationalFunction sum = a + RationalFunction(Rational(1)) / a; // x + 1/x
    CHECK(sum.eval(Rational(2)) == Rational(5, 2));
}

TEST_CASE("RationalFunction algebra identities on random rationals") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> d(-20, 20);
    RationalFunction x(PolyQ::linear(0, 1));
    RationalFunction one(Rational(1));
    // (x+a)(x-a) == x^2 - a^2 evaluated exactly
    for (int i = 0; i < 50; ++i) {
        Rational a(d(rng), 1 + std::abs(d(rng)));
        RationalFunction lhs = (x + RationalFunction(a)) * (x - RationalFunction(a));
        RationalFunction rhs = x * x - RationalFunction(a * a);
        CHECK(lhs == rhs);
    }
    // 1/(1/f) == f for nonzero f
    RationalFunction f = (x * x + one) / (x + RationalFunction(Rational(2)));
    CHECK(f.inverse().inverse() == f);
}
