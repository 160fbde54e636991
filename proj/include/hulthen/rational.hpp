#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "hulthen/bigint.hpp"

namespace hulthen::exact {

/// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { reduce(); }
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return Rational(num_.abs(), den_); }

    double to_double() const {
        double n = num_.to_double();
        double d = den_.to_double();
        if (std::isfinite(n) && std::isfinite(d)) return n / d;
        // scale both down until representable
        BigInt nn = num_, dd = den_;
        BigInt scale = BigInt::from_string("340282366920938463463374607431768211456"); // 2^128
        while (!std::isfinite(nn.to_double()) || !std::isfinite(dd.to_double())) {
            nn = nn / scale;
            dd = dd / scale;
            if (dd.is_zero()) return nn.negative() ? -HUGE_VAL : HUGE_VAL;
        }
        return nn.to_double() / dd.to_double();
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

/// v = root^2 * remainder with an integer remainder carrying no perfect
/// square that integer square-root extraction can find.
struct SquareSplit {
    Rational root;
    Rational remainder;
};

inline SquareSplit split_square(const Rational& v) {
    if (v.sign() < 0)
        throw std::domain_error("Rational: square split of negative value");
    BigInt pn = BigInt::isqrt(v.num());
    BigInt pd = BigInt::isqrt(v.den());
    bool nsq = pn * pn == v.num();
    bool dsq = pd * pd == v.den();
    if (nsq && dsq) return {Rational(pn, pd), Rational(1)};
    if (nsq) return {Rational(pn, v.den()), Rational(v.den(), BigInt(1))};
    if (dsq) return {Rational(BigInt(1), pd), Rational(v.num(), BigInt(1))};
    return {Rational(BigInt(1), v.den()), Rational(v.num() * v.den(), BigInt(1))};
}

} // namespace hulthen::exact
