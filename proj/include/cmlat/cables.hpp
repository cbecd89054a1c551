#pragma once

#include "cmlat/changemaker.hpp"
#include "cmlat/lattice.hpp"

namespace cmlat {

// Stage n of the extremal iterated-cable family: K_n is the
// (2,a_n)-cable of the (2,a_{n-1})-cable of ... of the unknot, with
// a_{k+1} = 2 p_k + 1, p_k = 2 a_k - 1, p_0 = 0.  Then p_n = (4^n - 1)/3
// and 2 g_n - 1 = p_n - 2^n, the equality case of the sharp genus bound.
struct CableStage {
    Int n = 0;
    std::vector<Int> a;   // a_1,...,a_n
    Int p = 0;            // p_n
    std::vector<Int> sigma;  // (1, 2, ..., 2^{n-1})
    Int genus = 0;        // via the cable genus recursion from g_0 = 0
    bool degenerate = false;  // n = 1: the unknot, slope 1

    Changemaker changemaker() const { return Changemaker(sigma); }
};

// Computes stage n >= 1 of the family.
CableStage family(Int n);

// (n-1)x(n-1) matrix with diagonal -5 and super/subdiagonal +2, the
// pairing of a linear chain of -5-framed unknots each linked twice
// positively with the next.  Requires n >= 2.
GramMatrix linking_matrix(Int n);

// Checks, for a stage with n >= 2:
//  (a) the vectors 2e_i - e_{i+1} inside -Z^n pair as linking_matrix(n),
//  (b) each of them pairs to zero with sigma_n,
//  (c) 2 g_n - 1 = p_n - sqrt(3 p_n + 1) exactly (3 p_n + 1 = 4^n),
//  (d) sharp_genus(sigma_n) = g_n.
bool verify_stage(const CableStage& stage);

}  // namespace cmlat
