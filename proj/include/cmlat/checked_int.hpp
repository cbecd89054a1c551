#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cmlat {

// All quantities in the library are 64-bit signed integers; every sum and
// product funnels through these helpers so that overflow surfaces as an
// overflow_error instead of undefined behavior.  Inputs up to |x| <= 2^62
// are in contract.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == std::numeric_limits<Int>::min())
        throw std::overflow_error("integer overflow in negation");
    return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Exact quotient of b / a, requiring a | b.
inline Int exact_div(Int b, Int a) {
    if (a == 0) throw std::domain_error("division by zero");
    if (b % a != 0) throw std::logic_error("inexact division");
    return b / a;
}

// Floor division (rounds toward -infinity).
inline Int floor_div(Int b, Int a) {
    if (a == 0) throw std::domain_error("division by zero");
    Int q = b / a;
    if ((b % a != 0) && ((b < 0) != (a < 0))) --q;
    return q;
}

// Least non-negative residue of b mod a (a > 0).
inline Int pos_mod(Int b, Int a) {
    if (a <= 0) throw std::domain_error("modulus must be positive");
    Int r = b % a;
    return r < 0 ? r + a : r;
}

inline Int gcd_int(Int a, Int b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(Int n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    Int x = static_cast<Int>(__builtin_sqrt(static_cast<double>(n)));
    while (x > 0 && x > n / x) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

inline Int isqrt_ceil(Int n) {
    Int f = isqrt_floor(n);
    return f * f == n ? f : f + 1;
}

}  // namespace cmlat
