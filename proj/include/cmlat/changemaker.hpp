#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cmlat/lattice.hpp"

namespace cmlat {

// Validated changemaker vector: non-decreasing non-negative entries with
// sigma_i <= sigma_0 + ... + sigma_{i-1} + 1 for every i >= 0 (so
// sigma_0 <= 1).  Equivalently, every amount 0 <= k <= |sigma|_1 is a
// subset sum.
class Changemaker {
public:
    explicit Changemaker(std::vector<Int> sigma);

    const std::vector<Int>& sigma() const { return sigma_; }
    Int norm_p() const { return norm_; }
    Int l1() const { return l1_; }
    std::size_t length() const { return sigma_.size(); }
    LatticeVector as_vector() const { return LatticeVector(sigma_); }

    friend bool operator==(const Changemaker&, const Changemaker&) = default;
    friend auto operator<=>(const Changemaker& a, const Changemaker& b) {
        return a.sigma_ <=> b.sigma_;
    }

private:
    std::vector<Int> sigma_;
    Int norm_;
    Int l1_;
};

struct ChangeSubset {
    std::vector<std::size_t> indices;  // ascending
    friend bool operator==(const ChangeSubset&, const ChangeSubset&) = default;
};

// True iff sigma_i <= sigma_0 + ... + sigma_{i-1} + 1 for all i.
// Throws if the tuple is unsorted or has a negative entry.
bool is_changemaker(const std::vector<Int>& sorted_tuple);

// Brute-force oracle for the defining property: every 0 <= k <= sum is a
// subset sum (bitset dynamic programming).
bool subset_sums_complete(const std::vector<Int>& sorted_tuple);

// Greedy descent: take the largest j with k >= sigma_0+...+sigma_{j-1}+1,
// subtract sigma_j, recurse.  Returns indices ascending.
ChangeSubset make_change(const Changemaker& sigma, Int k);

// All changemakers with sum of squares p, in lexicographic order.  Zero
// coordinates are excluded unless allow_zeros; with a fixed tuple length,
// zeros pad at the front.
std::vector<Changemaker> enumerate_changemakers(Int p, std::optional<std::size_t> length = {},
                                                bool allow_zeros = false);

// Visits every changemaker with positive entries and norm <= max_norm,
// depth first in lexicographic order.  Each call receives the tuple, its
// norm and its L1 norm; the tuple reference is only valid during the call.
void visit_changemakers(Int max_norm,
                        const std::function<void(const std::vector<Int>&, Int, Int)>& fn);

// g = (p - |sigma|_1)/2, the genus forced when the bound is attained.
Int sharp_genus(const Changemaker& sigma);

// Largest permitted value of 2g-1 for a negative definite trace:
// p - ceil(sqrt(p)) - 1.
Int bound_nonsharp(Int p);

// Largest odd value x with (p - x)^2 >= 3p + 1, i.e. the integer form of
// 2g - 1 <= p - sqrt(3p+1).
Int bound_sharp(Int p);

}  // namespace cmlat
