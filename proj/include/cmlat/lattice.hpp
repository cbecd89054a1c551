#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cmlat/checked_int.hpp"

namespace cmlat {

// Vector in the negative definite integer lattice -Z^(n+1): the pairing of
// two vectors is minus the Euclidean dot product, so <v,v> <= 0 with
// equality only at 0.
struct LatticeVector {
    std::vector<Int> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
    LatticeVector(std::initializer_list<Int> c) : coords(c) {}

    std::size_t size() const { return coords.size(); }
    Int operator[](std::size_t i) const { return coords[i]; }
    bool is_zero() const {
        for (Int x : coords)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
        return a.coords <=> b.coords;
    }
};

// Characteristic covector: every coordinate odd.
struct CharCovector {
    std::vector<Int> coords;

    explicit CharCovector(std::vector<Int> c);

    LatticeVector as_vector() const { return LatticeVector(coords); }
    std::size_t size() const { return coords.size(); }

    friend bool operator==(const CharCovector&, const CharCovector&) = default;
};

struct Fraction {
    Int p;
    Int q;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Symmetric integer matrix of pairwise lattice pairings.
struct GramMatrix {
    std::vector<std::vector<Int>> entries;

    GramMatrix() = default;
    explicit GramMatrix(std::vector<std::vector<Int>> e);

    std::size_t size() const { return entries.size(); }
    Int at(std::size_t i, std::size_t j) const { return entries[i][j]; }

    // Exact determinant (fraction-free Bareiss elimination).
    Int det() const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

// Linear lattice: the tridiagonal form with diagonal -a_i and off-diagonal
// pairing +1, where (a_1,...,a_n) is a Hirzebruch-Jung weight chain with
// every a_i >= 2.
class LinearLattice {
public:
    explicit LinearLattice(std::vector<Int> weights);

    const std::vector<Int>& weights() const { return weights_; }
    std::size_t rank() const { return weights_.size(); }
    GramMatrix gram() const;
    LinearLattice reversed() const;
    bool is_palindromic() const;

    friend bool operator==(const LinearLattice&, const LinearLattice&) = default;

private:
    std::vector<Int> weights_;
};

// <u,v> = -sum u_i v_i.  Throws on length mismatch.
Int inner_product(const LatticeVector& u, const LatticeVector& v);

// True iff every coordinate is odd.
bool is_characteristic(const LatticeVector& c);

// Hirzebruch-Jung continued fraction expansion of p/q, p > q >= 1 coprime:
// p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)) with every a_i >= 2.
LinearLattice hj_expand(Int p, Int q);

// Evaluates the continued fraction back to a reduced fraction p/q.
// Left inverse of hj_expand.
Fraction hj_evaluate(const LinearLattice& L);

// Canonical basis of the full sublattice {v : <v,sigma> = 0}, rank
// length-1.  Computed by unimodular row reduction followed by an integer
// echelon normal form (positive pivots, zeros below, entries above each
// pivot reduced to the least absolute residue, ties negative), so the
// output is reproducible across runs and platforms.
std::vector<LatticeVector> complement_basis(const LatticeVector& sigma);

// Matrix of pairwise inner products.
GramMatrix gram(const std::vector<LatticeVector>& vectors);

// All vectors v in the integer span of `basis` with <v,v> = -m, sorted
// lexicographically by ambient coordinates.  The coefficient search is
// bounded level by level via an exact LDL^T decomposition of the definite
// Gram matrix.  Throws if the basis is dependent.
std::vector<LatticeVector> vectors_of_norm(const std::vector<LatticeVector>& basis, Int m);

// Searches the sublattice spanned by `vectors` for a chain basis
// v_1,...,v_n with <v_i,v_i> = -a_i, <v_i,v_{i+1}> = 1 and all other
// pairings 0, i.e. an isometry with L.  Also tries the reversed weight
// sequence.  Returns the lexicographically least witness found, or
// nullopt.  The input basis is canonicalized first, so the verdict and
// witness do not depend on the order of `vectors`.
std::optional<std::vector<LatticeVector>> is_isometric_to_linear(
    const std::vector<LatticeVector>& vectors, const LinearLattice& L);

// Echelon canonical form of the lattice spanned by the given rows (the
// same normal form complement_basis uses).  Exposed for reuse and tests.
std::vector<LatticeVector> echelon_basis(std::vector<LatticeVector> rows);

// Variant of the chain search for repeated tests against one sublattice:
// the caller owns a norm -> vectors cache which is filled lazily with
// vectors_of_norm(basis, .).  Performs no rank or determinant checks.
std::optional<std::vector<LatticeVector>> chain_witness_with_pools(
    const std::vector<LatticeVector>& basis, const LinearLattice& L,
    std::map<Int, std::vector<LatticeVector>>& pools);

}  // namespace cmlat
