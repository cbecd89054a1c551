#pragma once

#include <optional>
#include <vector>

#include "cmlat/alexander.hpp"
#include "cmlat/changemaker.hpp"
#include "cmlat/lattice.hpp"
#include "cmlat/rational.hpp"

namespace cmlat {

// Spin^c structure on a p-surgery, identified with a residue mod p.
struct SpincLabel {
    Int i;
    Int p;
    SpincLabel(Int i_, Int p_) : i(i_), p(p_) {
        if (p <= 0 || i < 0 || i >= p) throw std::invalid_argument("spin^c label out of range");
    }
    friend bool operator==(const SpincLabel&, const SpincLabel&) = default;
};

// Correction terms are exact rationals with denominator dividing 4p.
using CorrectionTerm = Rational;

// i = ((<c,sigma> + p)/2) mod p.  Requires the parity to work out, which
// it does whenever <sigma,sigma> = -p and c is characteristic.
SpincLabel spinc_label(const CharCovector& c, const Changemaker& sigma, Int p);

// d(U_p, i) = ((2i - p)^2 - p) / 4p.
CorrectionTerm d_unknot(Int p, Int i);

// d(K_p, i) = d(U_p, i) - 2 t_rep(K) with rep = min(i, p-i).  The
// polynomial must be in L-space form.
CorrectionTerm d_lspace_surgery(Int p, Int i, const AlexanderPoly& P);

struct LemmaCLabel {
    Int i;                                      // signed representative, |i| <= p/2
    Int torsion;                                // t_|i|
    bool violated = false;                      // some covector in the box exceeds the bound
    std::optional<CharCovector> violation;      // lex-least violating covector
    std::optional<CharCovector> equality;       // lex-least covector attaining equality
};

struct LemmaCReport {
    Int p;
    std::vector<Int> sigma;
    Int box;
    std::vector<LemmaCLabel> labels;  // i ascending over (-p/2, p/2]
    bool violation_found = false;
    bool all_labels_witnessed = false;
    // A missing equality witness within a finite box is evidence, not
    // proof: Char is infinite and only |c_j| <= box was searched.
    bool witness_search_exhaustive = false;
};

// Checks c^2 + (n+1) <= -8 t_i(K) for every characteristic covector with
// |c_j| <= box and the label i it induces.  A violation certifies that
// sigma is incompatible with the knot; per-label equality witnesses are
// the sharpness evidence.
LemmaCReport lemma_c_check(const Changemaker& sigma, const AlexanderPoly& P, Int box = 3);

// (p - |sigma|_1)/2, realized by the sign vector; equals sharp_genus.
Int max_genus_from_sign_vectors(const Changemaker& sigma);

}  // namespace cmlat
