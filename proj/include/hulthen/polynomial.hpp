#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hulthen/rational.hpp"

namespace hulthen::exact {

/// Dense univariate polynomial over a field-like scalar (Rational for the
/// exact paths, double for quick numeric work). coeffs[k] multiplies x^k;
/// trailing zeros are trimmed so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    Polynomial(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }

    static Polynomial constant(T c) { return Polynomial({std::move(c)}); }
    static Polynomial x() { return Polynomial({T(0), T(1)}); }
    /// c0 + c1*x
    static Polynomial linear(T c0, T c1) {
        return Polynomial({std::move(c0), std::move(c1)});
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    T coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : T(0);
    }
    const T& leading() const {
        if (is_zero()) throw std::domain_error("Polynomial: zero has no leading");
        return coeffs_.back();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<T> r = coeffs_;
        for (auto& c : r) c = -c;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const T& s) {
        std::vector<T> r = a.coeffs_;
        for (auto& c : r) c *= s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Euclidean division; requires a nonzero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q,
                       Polynomial& r) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
        q = Polynomial();
        r = a;
        if (a.degree() < b.degree()) return;
        std::vector<T> qc(a.coeffs_.size() - b.coeffs_.size() + 1, T(0));
        std::vector<T> rc = a.coeffs_;
        const T& lead = b.coeffs_.back();
        for (std::size_t k = qc.size(); k-- > 0;) {
            std::size_t top = k + b.coeffs_.size() - 1;
            if (top >= rc.size()) continue;
            T f = rc[top] / lead;
            if (f == T(0)) continue;
            qc[k] = f;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                rc[k + i] -= f * b.coeffs_[i];
        }
        q = Polynomial(std::move(qc));
        r = Polynomial(std::move(rc));
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        Polynomial q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        Polynomial q, r;
        divmod(a, b, q, r);
        return r;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<T> r(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            r[k - 1] = coeffs_[k] * T(static_cast<long long>(k));
        return Polynomial(std::move(r));
    }

    template <class X>
    X eval(const X& x) const {
        X acc = X(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + X(coeffs_[i]);
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        T inv = T(1) / coeffs_.back();
        for (auto& c : r.coeffs_) c *= inv;
        return r;
    }

    /// Monic gcd via the Euclidean algorithm (field coefficients).
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = r.monic(); // keep coefficient growth under control
        }
        return a.monic();
    }

    std::string to_string(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k] == T(0)) continue;
            if (!out.empty()) out += " + ";
            out += scalar_str(coeffs_[k]);
            if (k >= 1) out += "*" + var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    std::vector<T> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    static std::string scalar_str(const Rational& r) { return r.to_string(); }
    static std::string scalar_str(double v) { return std::to_string(v); }
};

using PolyQ = Polynomial<Rational>;

/// Yun's square-free decomposition: f = prod_i a_i^i with the a_i square-free
/// and pairwise coprime. Returned list is indexed so that result[i-1] = a_i.
/// Input is normalized to monic first; the caller keeps track of the leading
/// coefficient separately.
inline std::vector<PolyQ> squarefree_decomposition(const PolyQ& f_in) {
    std::vector<PolyQ> parts;
    if (f_in.degree() <= 0) return parts;
    PolyQ f = f_in.monic();
    PolyQ fp = f.derivative();
    PolyQ g = PolyQ::gcd(f, fp);
    PolyQ c = f / g;
    PolyQ d = fp / g - c.derivative();
    while (c.degree() > 0) {
        PolyQ a = PolyQ::gcd(c, d);
        parts.push_back(a);
        c = c / a;
        d = d / a - c.derivative();
    }
    return parts;
}

/// Largest v with v^2 | f (monic), together with the square-free cofactor w:
/// monic(f) = v^2 * w.
struct SquareFreeSplit {
    PolyQ square_part; // v
    PolyQ radical;     // w
};

inline SquareFreeSplit squarefree_split(const PolyQ& f) {
    SquareFreeSplit out{PolyQ::constant(Rational(1)), PolyQ::constant(Rational(1))};
    if (f.degree() <= 0) return out;
    auto parts = squarefree_decomposition(f);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t mult = i + 1;
        for (std::size_t k = 0; k < mult / 2; ++k)
            out.square_part = out.square_part * parts[i];
        if (mult % 2 == 1) out.radical = out.radical * parts[i];
    }
    return out;
}

/// Rescales a rational-coefficient polynomial to integer coefficients with
/// content 1 and positive leading coefficient. Returns the primitive
/// polynomial together with the positive rational factor lambda such that
/// input = lambda * primitive.
struct PrimitiveForm {
    PolyQ primitive;
    Rational factor;
};

inline PrimitiveForm primitive_form(const PolyQ& f) {
    if (f.is_zero()) return {f, Rational(1)};
    BigInt den_lcm(1);
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        BigInt g = BigInt::gcd(den_lcm, c.den());
        den_lcm = den_lcm / g * c.den();
    }
    BigInt num_gcd(0);
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        BigInt scaled = c.num() * (den_lcm / c.den());
        num_gcd = BigInt::gcd(num_gcd, scaled);
    }
    Rational lambda(num_gcd, den_lcm);
    if (f.leading().sign() < 0) lambda = -lambda;
    std::vector<Rational> prim;
    prim.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) prim.push_back(c / lambda);
    return {PolyQ(std::move(prim)), lambda};
}

} // namespace hulthen::exact
