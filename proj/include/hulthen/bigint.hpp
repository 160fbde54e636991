#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hulthen::exact {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
/// (little-endian). Sized for the exact normalization algebra: operands stay
/// in the hundreds of digits, so schoolbook multiplication and division are
/// plenty.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            assign_magnitude(m);
        } else {
            assign_magnitude(static_cast<unsigned long long>(v));
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in literal");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool negative() const noexcept { return negative_; }
    int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    bool is_one() const noexcept {
        return !negative_ && limbs_.size() == 1 && limbs_[0] == 1;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_)
            return a.negative_ ? std::strong_ordering::less
                               : std::strong_ordering::greater;
        int c = cmp_magnitude(a.limbs_, b.limbs_);
        if (a.negative_) c = -c;
        return c < 0    ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_magnitude(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_magnitude(a.limbs_, b.limbs_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) {
            r.limbs_ = sub_magnitude(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_magnitude(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        if (r.limbs_.empty()) r.negative_ = false;
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_) && !r.limbs_.empty();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated division (C semantics: quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_magnitude(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        div_magnitude(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.trim();
        r.trim();
        q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
        r.negative_ = a.negative_ && !r.limbs_.empty();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// Floor of the square root of a nonnegative value.
    static BigInt isqrt(const BigInt& v) {
        if (v.negative_) throw std::domain_error("BigInt: isqrt of negative");
        if (v.is_zero()) return BigInt();
        // Newton iteration from a double seed.
        BigInt x = from_double_estimate(std::sqrt(v.to_double()) + 1.0);
        if (x.is_zero()) x = BigInt(1);
        for (;;) {
            BigInt y = (x + v / x) / BigInt(2);
            if (y >= x) break;
            x = std::move(y);
        }
        // fix up boundary
        while (x * x > v) x = x - BigInt(1);
        while ((x + BigInt(1)) * (x + BigInt(1)) <= v) x = x + BigInt(1);
        return x;
    }

    bool is_perfect_square() const {
        if (negative_) return false;
        BigInt r = isqrt(*this);
        return r * r == *this;
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
        return negative_ ? -v : v;
    }

    /// Exact conversion when the value fits in a long long; throws otherwise.
    long long to_int64() const {
        if (limbs_.size() > 2)
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        unsigned long long m = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            m = (m << 32) | limbs_[i];
        if (!negative_ && m > 0x7fffffffffffffffull)
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        if (negative_ && m > 0x8000000000000000ull)
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        return negative_ ? -static_cast<long long>(m - 1) - 1
                         : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
                rem = cur % 1000000000ull;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (negative_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    std::vector<std::uint32_t> limbs_; // empty means zero
    bool negative_ = false;

    void assign_magnitude(unsigned long long m) {
        limbs_.clear();
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static BigInt from_double_estimate(double v) {
        BigInt r;
        if (v < 1.0) return r;
        while (v >= 1.0) {
            // peel 32 bits at a time
            double hi = std::floor(v / 4294967296.0);
            auto low = static_cast<std::uint32_t>(v - hi * 4294967296.0);
            r.limbs_.push_back(low);
            v = hi;
        }
        // limbs were pushed least-significant first already
        r.trim();
        return r;
    }

    static int cmp_magnitude(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += 1ll << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // schoolbook long division on magnitudes; requires |a| >= |b|, b != 0
    static void div_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b,
                              std::vector<std::uint32_t>& q,
                              std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        // Knuth algorithm D with normalization
        int shift = 0;
        std::uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        auto shl = [shift](const std::vector<std::uint32_t>& v) {
            std::vector<std::uint32_t> out(v.size() + 1, 0);
            for (std::size_t i = 0; i < v.size(); ++i) {
                out[i] |= static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(v[i]) << shift));
                if (shift)
                    out[i + 1] = static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(v[i]) >> (32 - shift));
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return out;
        };
        std::vector<std::uint32_t> u = shl(a);
        std::vector<std::uint32_t> v = shl(b);
        std::size_t n = v.size();
        std::size_t m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const std::uint64_t base = 1ull << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num =
                (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t =
                    static_cast<std::int64_t>(u[i + j]) -
                    static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
                if (t < 0) {
                    t += static_cast<std::int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += static_cast<std::int64_t>(base);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) +
                                        v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(base - 1);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        // denormalize remainder
        r.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t cur = u[i] >> shift;
            if (shift && i + 1 < u.size())
                cur |= static_cast<std::uint64_t>(u[i + 1]) << (32 - shift);
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

} // namespace hulthen::exact
