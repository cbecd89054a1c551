#pragma once

#include <compare>
#include <string>

#include "cmlat/checked_int.hpp"

namespace cmlat {

namespace detail {

using Wide = __int128;

inline Int narrow(Wide v) {
    if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
        v < static_cast<Wide>(std::numeric_limits<Int>::min()) + 1)
        throw std::overflow_error("rational component exceeds 64 bits");
    return static_cast<Int>(v);
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide gcd_wide(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Exact rational number.  Stored reduced with positive denominator;
// intermediates widen to 128 bits and narrowing back is range-checked.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}
    Rational(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<detail::Wide>(a.num_) * b.den_ +
                             static_cast<detail::Wide>(b.num_) * a.den_,
                         static_cast<detail::Wide>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<detail::Wide>(a.num_) * b.den_ -
                             static_cast<detail::Wide>(b.num_) * a.den_,
                         static_cast<detail::Wide>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<detail::Wide>(a.num_) * b.num_,
                         static_cast<detail::Wide>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return from_wide(static_cast<detail::Wide>(a.num_) * b.den_,
                         static_cast<detail::Wide>(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
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
        detail::Wide lhs = static_cast<detail::Wide>(a.num_) * b.den_;
        detail::Wide rhs = static_cast<detail::Wide>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "a/b" in lowest terms; plain "a" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational from_wide(detail::Wide n, detail::Wide d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::Wide g = detail::gcd_wide(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow(n);
        r.den_ = detail::narrow(d);
        return r;
    }

    void assign(Int n, Int d) {
        *this = from_wide(static_cast<detail::Wide>(n), static_cast<detail::Wide>(d));
    }

    Int num_;
    Int den_;
};

}  // namespace cmlat
