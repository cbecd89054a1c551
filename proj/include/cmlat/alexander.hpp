#pragma once

#include <string>
#include <vector>

#include "cmlat/checked_int.hpp"

namespace cmlat {

// Symmetric integer Laurent polynomial sum a_j T^j, j = -g..g, with
// a_j = a_{-j} and a_g != 0.
class AlexanderPoly {
public:
    // full coefficient list a_{-g},...,a_g (odd length)
    explicit AlexanderPoly(std::vector<Int> coeffs);

    // "a_0,a_1,...,a_g" with the symmetric half implied
    static AlexanderPoly from_half(const std::vector<Int>& half);

    Int degree() const { return g_; }
    Int coeff(Int j) const {
        Int a = j < 0 ? -j : j;
        return a > g_ ? 0 : coeffs_[static_cast<std::size_t>(a + g_)];
    }

    friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;

private:
    std::vector<Int> coeffs_;  // index j + g
    Int g_;
};

struct TorsionProfile {
    std::vector<Int> values;  // t_0,...,t_g
    Int genus;
};

// True iff the nonzero coefficients are +-1, alternate in sign when read
// from degree g downward, and a_g = 1.
bool validate_lspace_form(const AlexanderPoly& P);

// t_i = sum_{j>=1} j * a_{|i|+j}; zero for |i| >= degree.
Int torsion(const AlexanderPoly& P, Int i);

TorsionProfile torsion_profile(const AlexanderPoly& P);

// The degree, which equals the knot genus for polynomials in L-space form.
Int genus(const AlexanderPoly& P);

// (T^{rs}-1)(T-1) / ((T^r-1)(T^s-1)) recentered symmetrically;
// degree (r-1)(s-1)/2.  Requires r,s >= 2 coprime.
AlexanderPoly torus_poly(Int r, Int s);

// Trivial polynomial 1.
AlexanderPoly unknot_poly();

// g with 2g - 1 = qr + q(2 g_companion - 1) - r.  Throws on a parity
// violation instead of rounding.
Int cable_genus(Int q, Int r, Int g_companion);

// Integer form of the strict slope inequality: q(2 g_companion - 1) < r.
bool cable_lspace_criterion(Int q, Int r, Int g_companion);

// Text format "a_0,a_1,...,a_g" (symmetric completion implied).
std::string poly_to_text(const AlexanderPoly& P);
AlexanderPoly poly_from_text(const std::string& text);

}  // namespace cmlat
