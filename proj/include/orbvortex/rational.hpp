#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orbvortex {

/// Exact rational number backed by 64-bit integers.
///
/// Always kept in reduced form: gcd(num, den) = 1 and den >= 1, with zero
/// represented as 0/1. Intermediate products are widened to 128 bits and
/// range-checked, so any overflow of the reduced result is reported via
/// std::overflow_error instead of wrapping. Denominators in this library
/// are bounded by products of cone multiplicities, which keeps everything
/// far away from the limits in practice.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        assign(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }

    /// Largest integer <= this value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Value as an integer; throws if the denominator is not 1.
    std::int64_t as_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: not an integer");
        return num_;
    }

    explicit operator double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }

    Rational operator+(const Rational& r) const {
        return make(static_cast<__int128>(num_) * r.den_ + static_cast<__int128>(r.num_) * den_,
                    static_cast<__int128>(den_) * r.den_);
    }
    Rational operator-(const Rational& r) const {
        return make(static_cast<__int128>(num_) * r.den_ - static_cast<__int128>(r.num_) * den_,
                    static_cast<__int128>(den_) * r.den_);
    }
    Rational operator*(const Rational& r) const {
        return make(static_cast<__int128>(num_) * r.num_,
                    static_cast<__int128>(den_) * r.den_);
    }
    Rational operator/(const Rational& r) const {
        if (r.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(static_cast<__int128>(num_) * r.den_,
                    static_cast<__int128>(den_) * r.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    constexpr bool operator==(const Rational& r) const {
        return num_ == r.num_ && den_ == r.den_;
    }

    // Cross-multiplication in 128 bits; denominators are positive.
    bool operator<(const Rational& r) const {
        return static_cast<__int128>(num_) * r.den_ < static_cast<__int128>(r.num_) * den_;
    }
    bool operator>(const Rational& r) const { return r < *this; }
    bool operator<=(const Rational& r) const { return !(r < *this); }
    bool operator>=(const Rational& r) const { return !(*this < r); }

    /// Renders as "p/q", or just "p" when the value is an integer.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    std::int64_t num_;
    std::int64_t den_;

    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    void assign(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        n /= g;
        d /= g;
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: 64-bit overflow");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static constexpr __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace orbvortex
