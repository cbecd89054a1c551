#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmlat/changemaker.hpp"
#include "cmlat/lattice.hpp"

namespace cmlat {

// A certificate that the linear lattice of (p,q) embeds as the orthogonal
// complement of a changemaker: sigma spans a (-p)-vector in -Z^(n+1) whose
// complement carries a chain basis pairing as the weights (or their
// reverse).
struct RealizationWitness {
    Int p = 0;
    Int q = 0;
    std::vector<Int> weights;
    Changemaker sigma;
    std::vector<LatticeVector> chain;
    Int genus = 0;
};

struct ScanRecord {
    Int p = 0;
    Int q = 0;
    std::vector<Int> weights;
    bool realized = false;
    std::optional<std::vector<Int>> sigma;
    std::optional<Int> genus;
    std::optional<bool> berge_ok;
    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

// Searches every changemaker of norm p and length n+1 (n = length of the
// weight expansion of p/q; zero coordinates admitted as candidates) for a
// chain basis of its complement matching the linear lattice of (p,q).
// Returns the lexicographically least witness or nullopt; a nullopt
// verdict certifies that L(p,q), oriented as the plumbing boundary, is
// not integer p-surgery along any knot.
std::optional<RealizationWitness> realize(Int p, Int q);

// Exact integer form of 2g - 1 <= p - 2 sqrt((4p+1)/5):
// 5 (p - (2g-1))^2 >= 4 (4p+1).
bool berge_bound(Int p, Int g);

// Maximum of 2*sharp_genus(sigma) - 1 over all changemakers of norm p.
Int goda_teragaito_max(Int p);

// Lexicographically least changemaker attaining goda_teragaito_max(p).
Changemaker goda_teragaito_maximizer(Int p);

// Every coprime pair q < p <= p_max in (p,q) order; each record carries
// the realization verdict and, when realized, the witness data and the
// Berge bound check.  Worker count only affects speed, never output.
std::vector<ScanRecord> scan(Int p_max, int workers = 1);

// Records with berge_ok == false.
std::vector<ScanRecord> berge_violations(const std::vector<ScanRecord>& records);

// Translation between the plumbing-boundary orientation used here and
// surgery descriptions with the opposite orientation: q -> p - q.
Int reverse_orientation_q(Int p, Int q);

// Connected-sum bookkeeping for surgeries yielding two lens summands:
// either a (p,q)-torus knot (slope pq, summands L(p,q) # L(q,p)) or a
// (p,q)-cable of an (r,s)-torus knot with p = qrs +- 1 (slope pq,
// summands L(p, q s^2) # L(q, +-1)), both with the opposite orientation.
struct CablingSumData {
    std::string kind;  // "torus" | "cable"
    Int p = 0;
    Int q = 0;
    Int r = 0;  // cable only
    Int s = 0;  // cable only
    Int sign = 0;  // cable only: p = qrs + sign
    Int slope = 0;  // pq
    std::pair<Int, Int> orders;  // summand group orders (p, q)
    std::pair<Int, Int> summand1;  // lens parameters of the order-p summand
    std::pair<Int, Int> summand2;  // lens parameters of the order-q summand
};

CablingSumData cabling_sum_torus(Int p, Int q);
CablingSumData cabling_sum_cable(Int q, Int r, Int s, Int sign);

// ---- serialization (External Interfaces) ----
// CSV columns: p,q,weights,realized,sigma,genus,berge_ok with weights and
// sigma semicolon-separated; empty fields when not realized.
std::string scan_csv_header();
std::string scan_record_csv(const ScanRecord& rec);
// JSON-lines: one object per record with the same field names, optional
// fields omitted when not realized.
std::string scan_record_json(const ScanRecord& rec);

}  // namespace cmlat
