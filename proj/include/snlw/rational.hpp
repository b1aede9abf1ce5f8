#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace snlw {

/// Exact rational arithmetic on int64 with __int128 intermediates.
///
/// Admissibility checks are boundary-sensitive predicates, so every exponent
/// relation is evaluated without rounding. A denominator of zero encodes a
/// signed infinity (num = +1 or -1); that is how q = infinity (1/q = 0) is
/// carried through the pair arithmetic.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    static Rational infinity(int sign = +1) {
        Rational r;
        r.num_ = sign >= 0 ? 1 : -1;
        r.den_ = 0;
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_finite() const { return den_ != 0; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return den_ != 0 && num_ == 0; }

    double to_double() const {
        if (den_ == 0) return num_ > 0 ? HUGE_VAL : -HUGE_VAL;
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 0) return num_ > 0 ? "inf" : "-inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational inverse() const {
        if (is_infinite()) return Rational(0);
        if (num_ == 0) return infinity(+1);
        Rational r;
        if (num_ > 0) {
            r.num_ = den_;
            r.den_ = num_;
        } else {
            r.num_ = -den_;
            r.den_ = -num_;
        }
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) {
                if (a.num_ != b.num_)
                    throw std::domain_error("Rational: inf + (-inf)");
                return a;
            }
            return a.is_infinite() ? a : b;
        }
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return fromWide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            int sa = a.sign(), sb = b.sign();
            if (sa == 0 || sb == 0) throw std::domain_error("Rational: inf * 0");
            return infinity(sa * sb);
        }
        return fromWide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    // sign of the value: -1, 0, +1 (infinities carry their sign)
    int sign() const {
        if (num_ > 0) return 1;
        if (num_ < 0) return -1;
        return 0;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a == b) return false;
            if (a.is_infinite()) return a.num_ < 0;  // -inf < anything else
            return b.num_ > 0;                       // anything finite < +inf
        }
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Best rational approximation with denominator <= cap (continued fractions).
    static Rational approximate(double x, long long denominatorCap = 10000) {
        if (!std::isfinite(x)) return infinity(x > 0 ? +1 : -1);
        bool neg = x < 0;
        double v = std::abs(x);
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double frac = v;
        for (int it = 0; it < 64; ++it) {
            double fl = std::floor(frac);
            if (fl > 9e17) break;
            long long a = static_cast<long long>(fl);
            long long p2 = a * p1 + p0;
            long long q2 = a * q1 + q0;
            if (q2 > denominatorCap || q2 < 0) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            double rem = frac - fl;
            if (rem < 1e-15) break;
            frac = 1.0 / rem;
        }
        if (q1 == 0) return Rational(neg ? -p0 : p0, q0);
        return Rational(neg ? -p1 : p1, q1);
    }

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rational fromWide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        const __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: value exceeds 64-bit range after reduction");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    long long num_;
    long long den_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace snlw
