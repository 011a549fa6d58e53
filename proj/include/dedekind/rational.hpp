#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dedekind {

/// Arbitrary-precision signed integer; holds every index, residue and
/// numerator in the library.
using Integer = boost::multiprecision::cpp_int;

/// Quotient of floor division (rounds toward negative infinity, unlike the
/// built-in cpp_int division which truncates toward zero).
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

inline Integer from_u128(unsigned __int128 v) {
    Integer hi = static_cast<std::uint64_t>(v >> 64);
    hi <<= 64;
    return hi | static_cast<std::uint64_t>(v);
}

inline Integer from_i128(__int128 v) {
    if (v >= 0) return from_u128(static_cast<unsigned __int128>(v));
    return -from_u128(static_cast<unsigned __int128>(-v));
}

/// Exact rational number, kept in lowest terms with a positive denominator
/// after every operation, so structural equality is numeric equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
    Rational(long long value) : num_(value), den_(1) {}           // NOLINT

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Greatest integer <= *this; floor(-1/2) == -1.
    Integer floor() const { return floor_div(num_, den_); }

    /// Fractional part *this - floor(*this), always in [0, 1).
    Rational frac() const { return Rational(num_ - floor() * den_, den_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& rhs) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        reduce();
        return *this;
    }

    Rational& operator-=(const Rational& rhs) {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
        reduce();
        return *this;
    }

    Rational& operator*=(const Rational& rhs) {
        num_ *= rhs.num_;
        den_ *= rhs.den_;
        reduce();
        return *this;
    }

    Rational& operator/=(const Rational& rhs) {
        if (rhs.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        num_ *= rhs.den_;
        den_ *= rhs.num_;
        normalize();
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer lhs = a.num_ * b.den_;
        Integer rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    /// Canonical rendering: "10/7", "-1/14"; integer values render bare ("0", "5").
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    // den_ already positive here
    void reduce() {
        Integer g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
inline Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
inline Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
inline Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dedekind
