#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "hulthen/polynomial.hpp"

namespace hulthen::exact {

/// Rational function of one symbol with exact rational coefficients, stored
/// reduced (gcd of numerator and denominator is constant) with a monic
/// denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(PolyQ::constant(Rational(1))) {}
    RationalFunction(Rational c)
        : num_(PolyQ::constant(std::move(c))), den_(PolyQ::constant(Rational(1))) {
        normalize();
    }
    explicit RationalFunction(PolyQ num)
        : num_(std::move(num)), den_(PolyQ::constant(Rational(1))) {}
    RationalFunction(PolyQ num, PolyQ den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    const PolyQ& num() const noexcept { return num_; }
    const PolyQ& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const {
        return den_.degree() == 0 && num_ == den_;
    }

    friend RationalFunction operator+(const RationalFunction& a,
                                      const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a,
                                      const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a,
                                      const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a,
                                      const RationalFunction& b) {
        if (b.is_zero())
            throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    RationalFunction inverse() const {
        if (is_zero())
            throw std::domain_error("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact evaluation at a rational point; the point must not be a pole.
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero())
            throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_.eval(x) / d;
    }

    double eval_double(double x) const {
        double d = 0.0, n = 0.0;
        for (std::size_t i = den_.coeffs().size(); i-- > 0;)
            d = d * x + den_.coeffs()[i].to_double();
        for (std::size_t i = num_.coeffs().size(); i-- > 0;)
            n = n * x + num_.coeffs()[i].to_double();
        return n / d;
    }

    std::string to_string(const std::string& var = "s") const {
        if (den_.degree() == 0 && den_.coeff(0) == Rational(1))
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    PolyQ num_;
    PolyQ den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyQ::constant(Rational(1));
            return;
        }
        PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lead = den_.leading();
        if (!(lead == Rational(1))) {
            Rational inv = lead.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

} // namespace hulthen::exact
