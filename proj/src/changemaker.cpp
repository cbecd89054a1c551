#include "cmlat/changemaker.hpp"

#include <algorithm>

namespace cmlat {

namespace {

void check_sorted_nonnegative(const std::vector<Int>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0) throw std::invalid_argument("changemaker entries must be non-negative");
        if (i > 0 && t[i] < t[i - 1])
            throw std::invalid_argument("changemaker tuple must be non-decreasing");
    }
}

}  // namespace

Changemaker::Changemaker(std::vector<Int> sigma) : sigma_(std::move(sigma)) {
    if (!is_changemaker(sigma_)) throw std::invalid_argument("not a changemaker vector");
    norm_ = 0;
    l1_ = 0;
    for (Int x : sigma_) {
        norm_ = checked_add(norm_, checked_mul(x, x));
        l1_ = checked_add(l1_, x);
    }
    if (norm_ < 1) throw std::invalid_argument("changemaker must have positive norm");
}

bool is_changemaker(const std::vector<Int>& t) {
    check_sorted_nonnegative(t);
    Int prefix = 0;
    for (Int x : t) {
        if (x > checked_add(prefix, 1)) return false;
        prefix = checked_add(prefix, x);
    }
    return true;
}

bool subset_sums_complete(const std::vector<Int>& t) {
    check_sorted_nonnegative(t);
    Int total = 0;
    for (Int x : t) total = checked_add(total, x);
    const std::size_t bits = static_cast<std::size_t>(total) + 1;
    std::vector<std::uint64_t> reach((bits + 63) / 64, 0);
    reach[0] = 1;
    auto shift_or = [&](std::size_t s) {
        const std::size_t words = s / 64, rem = s % 64;
        for (std::size_t i = reach.size(); i-- > 0;) {
            std::uint64_t v = 0;
            if (i >= words) {
                v = reach[i - words] << rem;
                if (rem && i > words) v |= reach[i - words - 1] >> (64 - rem);
            }
            reach[i] |= v;
        }
    };
    for (Int x : t)
        if (x > 0) shift_or(static_cast<std::size_t>(x));
    for (std::size_t k = 0; k < bits; ++k)
        if (!(reach[k / 64] >> (k % 64) & 1)) return false;
    return true;
}

ChangeSubset make_change(const Changemaker& cm, Int k) {
    if (k < 0 || k > cm.l1()) throw std::invalid_argument("make_change amount out of range");
    const auto& s = cm.sigma();
    std::vector<Int> prefix(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) prefix[i + 1] = checked_add(prefix[i], s[i]);

    ChangeSubset out;
    std::size_t top = s.size();
    while (k > 0) {
        std::size_t j = top;
        while (j > 0 && k < prefix[j - 1] + 1) --j;
        // the changemaker inequality guarantees j > 0 and k - s[j-1] >= 0
        out.indices.push_back(j - 1);
        k -= s[j - 1];
        top = j - 1;
    }
    std::reverse(out.indices.begin(), out.indices.end());
    return out;
}

namespace {

struct EnumState {
    Int p;
    std::optional<std::size_t> length;
    std::vector<Int> cur;
    Int norm = 0;
    Int sum = 0;
    std::vector<Changemaker>* out;
};

void enum_rec(EnumState& st) {
    if (st.norm == st.p && (!st.length || st.cur.size() == *st.length)) {
        st.out->emplace_back(st.cur);
        return;
    }
    if (st.length && st.cur.size() >= *st.length) return;
    Int lo = st.cur.empty() ? 1 : std::max<Int>(st.cur.back(), 1);
    Int hi = std::min(checked_add(st.sum, 1), isqrt_floor(st.p - st.norm));
    for (Int v = lo; v <= hi; ++v) {
        if (st.length) {
            // every remaining slot holds at least v
            Int slots = static_cast<Int>(*st.length - st.cur.size());
            if (checked_mul(checked_mul(v, v), slots) > st.p - st.norm) break;
        }
        st.cur.push_back(v);
        st.norm += v * v;
        st.sum += v;
        enum_rec(st);
        st.sum -= v;
        st.norm -= v * v;
        st.cur.pop_back();
    }
}

}  // namespace

std::vector<Changemaker> enumerate_changemakers(Int p, std::optional<std::size_t> length,
                                                bool allow_zeros) {
    if (p < 1) throw std::invalid_argument("enumerate_changemakers requires p >= 1");
    std::vector<Changemaker> out;
    EnumState st{p, {}, {}, 0, 0, &out};

    if (length && allow_zeros) {
        // zeros can only pad the front; enumerate the positive part of
        // every shorter length and prepend zeros
        std::vector<Changemaker> padded;
        for (std::size_t zeros = *length; zeros-- > 0;) {
            std::size_t positive = *length - zeros;
            if (positive == 0) continue;
            st.length = positive;
            st.cur.clear();
            st.norm = st.sum = 0;
            out.clear();
            enum_rec(st);
            for (const auto& cm : out) {
                std::vector<Int> full(zeros, 0);
                full.insert(full.end(), cm.sigma().begin(), cm.sigma().end());
                padded.emplace_back(std::move(full));
            }
        }
        std::sort(padded.begin(), padded.end());
        return padded;
    }

    st.length = length;
    enum_rec(st);
    return out;  // depth-first ascent is already lexicographic
}

namespace {

void visit_rec(Int max_norm, std::vector<Int>& cur, Int norm, Int sum,
               const std::function<void(const std::vector<Int>&, Int, Int)>& fn) {
    fn(cur, norm, sum);
    Int lo = cur.back();
    Int hi = std::min(checked_add(sum, 1), isqrt_floor(max_norm - norm));
    for (Int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        visit_rec(max_norm, cur, norm + v * v, sum + v, fn);
        cur.pop_back();
    }
}

}  // namespace

void visit_changemakers(Int max_norm,
                        const std::function<void(const std::vector<Int>&, Int, Int)>& fn) {
    if (max_norm < 1) return;
    std::vector<Int> cur{1};  // a positive changemaker starts with 1
    visit_rec(max_norm, cur, 1, 1, fn);
}

Int sharp_genus(const Changemaker& cm) {
    return exact_div(checked_sub(cm.norm_p(), cm.l1()), 2);
}

Int bound_nonsharp(Int p) {
    if (p < 1) throw std::invalid_argument("bound_nonsharp requires p >= 1");
    return checked_sub(checked_sub(p, isqrt_ceil(p)), 1);
}

Int bound_sharp(Int p) {
    if (p < 1) throw std::invalid_argument("bound_sharp requires p >= 1");
    Int x = checked_sub(p, isqrt_ceil(checked_add(checked_mul(3, p), 1)));
    if (x % 2 == 0) --x;  // 2g - 1 is odd
    return x;
}

}  // namespace cmlat
