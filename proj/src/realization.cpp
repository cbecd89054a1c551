#include "cmlat/realization.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace cmlat {

namespace {

void check_pq(Int p, Int q) {
    if (p < 2 || q < 1 || q >= p) throw std::invalid_argument("require p > q >= 1, p >= 2");
    if (gcd_int(p, q) != 1) throw std::invalid_argument("require gcd(p,q) = 1");
}

// Shared state for all (p,q) with the same p: the changemaker candidates
// bucketed by length, and per-sigma complement data reused across q.
struct PerSlopeCache {
    Int p = 0;
    std::map<std::size_t, std::vector<Changemaker>> by_length;

    struct SigmaData {
        std::vector<LatticeVector> basis;
        std::map<Int, std::vector<LatticeVector>> pools;
    };
    std::map<std::vector<Int>, SigmaData> sigma_data;

    explicit PerSlopeCache(Int p_) : p(p_) {
        for (auto& cm : enumerate_changemakers(p))
            by_length[cm.length()].push_back(std::move(cm));
    }
};

std::optional<RealizationWitness> realize_impl(Int p, Int q, PerSlopeCache& cache) {
    LinearLattice lattice = hj_expand(p, q);
    const std::size_t n = lattice.rank();

    // Candidates of length n+1 with a zero coordinate always fail: a zero
    // puts a norm-1 vector (a basis vector) in the complement, and a
    // linear lattice with all weights >= 2 has no vectors of norm 1.  So
    // only the positive changemakers of length exactly n+1 can win, and
    // they come after the padded ones in lexicographic order anyway.
    auto it = cache.by_length.find(n + 1);
    if (it == cache.by_length.end()) return std::nullopt;

    for (const Changemaker& sigma : it->second) {
        auto [entry, fresh] = cache.sigma_data.try_emplace(sigma.sigma());
        if (fresh) entry->second.basis = complement_basis(sigma.as_vector());
        auto chain = chain_witness_with_pools(entry->second.basis, lattice, entry->second.pools);
        if (!chain) continue;

        GramMatrix found = gram(*chain);
        if (found != lattice.gram() && found != lattice.reversed().gram())
            throw std::logic_error("chain witness fails its gram check");
        RealizationWitness w{p, q, lattice.weights(), sigma, std::move(*chain),
                             sharp_genus(sigma)};
        return w;
    }
    return std::nullopt;
}

ScanRecord record_for(Int p, Int q, PerSlopeCache& cache) {
    ScanRecord rec;
    rec.p = p;
    rec.q = q;
    rec.weights = hj_expand(p, q).weights();
    if (auto w = realize_impl(p, q, cache)) {
        rec.realized = true;
        rec.sigma = w->sigma.sigma();
        rec.genus = w->genus;
        rec.berge_ok = berge_bound(p, w->genus);
    }
    return rec;
}

}  // namespace

std::optional<RealizationWitness> realize(Int p, Int q) {
    check_pq(p, q);
    PerSlopeCache cache(p);
    return realize_impl(p, q, cache);
}

bool berge_bound(Int p, Int g) {
    if (p < 1) throw std::invalid_argument("berge_bound requires p >= 1");
    Int gap = checked_sub(p, checked_sub(checked_mul(2, g), 1));
    Int lhs = checked_mul(5, checked_mul(gap, gap));
    Int rhs = checked_mul(4, checked_add(checked_mul(4, p), 1));
    return lhs >= rhs;
}

Int goda_teragaito_max(Int p) {
    return checked_sub(checked_mul(2, sharp_genus(goda_teragaito_maximizer(p))), 1);
}

Changemaker goda_teragaito_maximizer(Int p) {
    if (p < 2) throw std::invalid_argument("goda_teragaito_max requires p >= 2");
    std::optional<Changemaker> best;
    for (auto& cm : enumerate_changemakers(p)) {
        if (!best || sharp_genus(cm) > sharp_genus(*best)) best = std::move(cm);
    }
    // the all-ones changemaker guarantees the enumeration is non-empty
    return *best;
}

std::vector<ScanRecord> scan(Int p_max, int workers) {
    if (p_max < 2) throw std::invalid_argument("scan requires p_max >= 2");
    if (workers < 1) throw std::invalid_argument("scan requires at least one worker");

    std::vector<std::vector<ScanRecord>> per_p(static_cast<std::size_t>(p_max) + 1);
    std::atomic<Int> next{2};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        try {
            for (;;) {
                Int p = next.fetch_add(1);
                if (p > p_max) return;
                PerSlopeCache cache(p);
                auto& out = per_p[static_cast<std::size_t>(p)];
                for (Int q = 1; q < p; ++q)
                    if (gcd_int(p, q) == 1) out.push_back(record_for(p, q, cache));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ScanRecord> records;
    for (auto& group : per_p)
        for (auto& rec : group) records.push_back(std::move(rec));
    return records;
}

std::vector<ScanRecord> berge_violations(const std::vector<ScanRecord>& records) {
    std::vector<ScanRecord> out;
    for (const auto& rec : records)
        if (rec.berge_ok && !*rec.berge_ok) out.push_back(rec);
    return out;
}

Int reverse_orientation_q(Int p, Int q) {
    check_pq(p, q);
    return p - q;
}

CablingSumData cabling_sum_torus(Int p, Int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus knot requires p, q >= 2");
    if (gcd_int(p, q) != 1) throw std::invalid_argument("torus knot requires gcd(p,q) = 1");
    CablingSumData data;
    data.kind = "torus";
    data.p = p;
    data.q = q;
    data.slope = checked_mul(p, q);
    data.orders = {p, q};
    data.summand1 = {p, pos_mod(q, p)};
    data.summand2 = {q, pos_mod(p, q)};
    return data;
}

CablingSumData cabling_sum_cable(Int q, Int r, Int s, Int sign) {
    if (q < 2) throw std::invalid_argument("cable requires q >= 2");
    if (r < 2 || s < 2 || gcd_int(r, s) != 1)
        throw std::invalid_argument("companion must be an (r,s)-torus knot, r,s >= 2 coprime");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    CablingSumData data;
    data.kind = "cable";
    data.q = q;
    data.r = r;
    data.s = s;
    data.sign = sign;
    data.p = checked_add(checked_mul(q, checked_mul(r, s)), sign);
    data.slope = checked_mul(data.p, q);
    data.orders = {data.p, q};
    data.summand1 = {data.p, pos_mod(checked_mul(q, checked_mul(s, s)), data.p)};
    data.summand2 = {q, pos_mod(sign, q)};
    return data;
}

namespace {

std::string join_semicolons(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string scan_csv_header() { return "p,q,weights,realized,sigma,genus,berge_ok"; }

std::string scan_record_csv(const ScanRecord& rec) {
    std::string out = std::to_string(rec.p) + "," + std::to_string(rec.q) + "," +
                      join_semicolons(rec.weights) + "," + (rec.realized ? "true" : "false") + ",";
    if (rec.sigma) out += join_semicolons(*rec.sigma);
    out += ",";
    if (rec.genus) out += std::to_string(*rec.genus);
    out += ",";
    if (rec.berge_ok) out += *rec.berge_ok ? "true" : "false";
    return out;
}

std::string scan_record_json(const ScanRecord& rec) {
    nlohmann::json j;
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["weights"] = rec.weights;
    j["realized"] = rec.realized;
    if (rec.sigma) j["sigma"] = *rec.sigma;
    if (rec.genus) j["genus"] = *rec.genus;
    if (rec.berge_ok) j["berge_ok"] = *rec.berge_ok;
    return j.dump();
}

}  // namespace cmlat
