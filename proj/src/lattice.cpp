#include "cmlat/lattice.hpp"

#include <algorithm>
#include <map>

#include "cmlat/rational.hpp"

namespace cmlat {

CharCovector::CharCovector(std::vector<Int> c) : coords(std::move(c)) {
    for (Int x : coords)
        if (pos_mod(x, 2) != 1)
            throw std::invalid_argument("characteristic covector requires odd coordinates");
}

GramMatrix::GramMatrix(std::vector<std::vector<Int>> e) : entries(std::move(e)) {
    const std::size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n) throw std::invalid_argument("gram matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries[i][j] != entries[j][i])
                throw std::invalid_argument("gram matrix must be symmetric");
}

Int GramMatrix::det() const {
    const std::size_t n = size();
    if (n == 0) return 1;
    auto a = entries;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(
                    checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])),
                    prev);
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

LinearLattice::LinearLattice(std::vector<Int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("linear lattice needs at least one weight");
    for (Int a : weights_)
        if (a < 2) throw std::invalid_argument("linear lattice weights must be >= 2");
}

GramMatrix LinearLattice::gram() const {
    const std::size_t n = rank();
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = checked_neg(weights_[i]);
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return GramMatrix(std::move(g));
}

LinearLattice LinearLattice::reversed() const {
    std::vector<Int> w(weights_.rbegin(), weights_.rend());
    return LinearLattice(std::move(w));
}

bool LinearLattice::is_palindromic() const {
    return std::equal(weights_.begin(), weights_.end(), weights_.rbegin());
}

Int inner_product(const LatticeVector& u, const LatticeVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner product length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s = checked_add(s, checked_mul(u[i], v[i]));
    return checked_neg(s);
}

bool is_characteristic(const LatticeVector& c) {
    for (Int x : c.coords)
        if (pos_mod(x, 2) != 1) return false;
    return true;
}

LinearLattice hj_expand(Int p, Int q) {
    if (q < 1 || p <= q) throw std::invalid_argument("hj_expand requires p > q >= 1");
    if (gcd_int(p, q) != 1) throw std::invalid_argument("hj_expand requires gcd(p,q) = 1");
    std::vector<Int> weights;
    while (q > 0) {
        Int a = floor_div(checked_add(p, checked_sub(q, 1)), q);  // ceil(p/q)
        weights.push_back(a);
        Int r = checked_sub(checked_mul(a, q), p);
        p = q;
        q = r;
    }
    return LinearLattice(std::move(weights));
}

Fraction hj_evaluate(const LinearLattice& L) {
    const auto& w = L.weights();
    Int p = w.back();
    Int q = 1;
    for (auto it = std::next(w.rbegin()); it != w.rend(); ++it) {
        Int np = checked_sub(checked_mul(*it, p), q);
        q = p;
        p = np;
    }
    if (gcd_int(p, q) != 1) throw std::logic_error("continued fraction did not reduce");
    return Fraction{p, q};
}

namespace {

void row_axpy(std::vector<Int>& dst, const std::vector<Int>& src, Int factor) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = checked_sub(dst[i], checked_mul(factor, src[i]));
}

}  // namespace

std::vector<LatticeVector> echelon_basis(std::vector<LatticeVector> rows) {
    std::erase_if(rows, [](const LatticeVector& v) { return v.is_zero(); });
    if (rows.empty()) return {};
    const std::size_t m = rows[0].coords.size();
    for (const auto& r : rows)
        if (r.size() != m) throw std::invalid_argument("echelon rows must share a length");

    std::vector<std::vector<Int>> a;
    a.reserve(rows.size());
    for (auto& r : rows) a.push_back(std::move(r.coords));

    std::size_t top = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < m && top < a.size(); ++col) {
        // gcd-reduce the column below `top` until one nonzero entry remains
        for (;;) {
            std::size_t best = a.size();
            for (std::size_t i = top; i < a.size(); ++i)
                if (a[i][col] != 0 &&
                    (best == a.size() || checked_abs(a[i][col]) < checked_abs(a[best][col])))
                    best = i;
            if (best == a.size()) break;
            std::swap(a[top], a[best]);
            bool clean = true;
            for (std::size_t i = top + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Int f = a[i][col] / a[top][col];
                if (f != 0) row_axpy(a[i], a[top], f);
                if (a[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[top][col] == 0) continue;
        if (a[top][col] < 0)
            for (auto& x : a[top]) x = checked_neg(x);
        pivot_col.push_back(col);
        ++top;
    }
    a.resize(top);

    // Reduce entries above each pivot to the least absolute residue,
    // breaking ties toward the negative representative.
    for (std::size_t r = 0; r < top; ++r) {
        Int h = a[r][pivot_col[r]];
        for (std::size_t j = 0; j < r; ++j) {
            Int e = a[j][pivot_col[r]];
            Int f = floor_div(checked_add(checked_mul(2, e), h), checked_mul(2, h));
            if (f != 0) row_axpy(a[j], a[r], f);
        }
    }

    std::vector<LatticeVector> out;
    out.reserve(top);
    for (auto& row : a) out.emplace_back(std::move(row));
    return out;
}

std::vector<LatticeVector> complement_basis(const LatticeVector& sigma) {
    if (sigma.size() == 0 || sigma.is_zero())
        throw std::invalid_argument("complement of the zero vector is undefined");
    const std::size_t m = sigma.size();

    // rows [head | tail] with the invariant head = sum tail_k * sigma_k;
    // unimodular row operations drive all heads but one to zero, and the
    // zero-head tails form a basis of the orthogonal complement.
    std::vector<Int> head(m);
    std::vector<std::vector<Int>> tail(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        head[i] = sigma[i];
        tail[i][i] = 1;
    }
    for (;;) {
        std::size_t piv = m, count = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (head[i] != 0) {
                ++count;
                if (piv == m || checked_abs(head[i]) < checked_abs(head[piv])) piv = i;
            }
        if (count <= 1) break;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == piv || head[i] == 0) continue;
            Int f = head[i] / head[piv];
            if (f != 0) {
                head[i] = checked_sub(head[i], checked_mul(f, head[piv]));
                row_axpy(tail[i], tail[piv], f);
            }
        }
    }

    std::vector<LatticeVector> kernel;
    for (std::size_t i = 0; i < m; ++i)
        if (head[i] == 0) kernel.emplace_back(std::move(tail[i]));
    return echelon_basis(std::move(kernel));
}

GramMatrix gram(const std::vector<LatticeVector>& vectors) {
    const std::size_t n = vectors.size();
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g[i][j] = g[j][i] = inner_product(vectors[i], vectors[j]);
    return GramMatrix(std::move(g));
}

namespace {

// Exact LDL^T of a positive definite rational matrix.  Returns false if
// the matrix is not positive definite (i.e. the vectors were dependent).
bool ldl_decompose(const GramMatrix& gpos, std::vector<std::vector<Rational>>& lower,
                   std::vector<Rational>& diag) {
    const std::size_t n = gpos.size();
    lower.assign(n, std::vector<Rational>(n, Rational(0)));
    diag.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational d(gpos.at(j, j));
        for (std::size_t k = 0; k < j; ++k)
            d -= lower[j][k] * lower[j][k] * diag[k];
        if (!(d > Rational(0))) return false;
        diag[j] = d;
        lower[j][j] = Rational(1);
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational v(gpos.at(i, j));
            for (std::size_t k = 0; k < j; ++k)
                v -= lower[i][k] * lower[j][k] * diag[k];
            lower[i][j] = v / d;
        }
    }
    return true;
}

// Depth-first enumeration of coefficient vectors c with c^T G c = m,
// where Q(c) = sum_j d_j (c_j + sum_{k>j} l_{kj} c_k)^2.  Coordinates are
// fixed from the last to the first; at each level the feasible integers
// form a contiguous interval that is walked outward from the center, so
// no square roots are needed.
class NormEnumerator {
public:
    NormEnumerator(const std::vector<std::vector<Rational>>& lower,
                   const std::vector<Rational>& diag, Int target)
        : lower_(lower), diag_(diag), target_(target), n_(diag.size()),
          shift_(n_, Rational(0)), coeff_(n_, 0) {}

    std::vector<std::vector<Int>> run() {
        descend(static_cast<std::ptrdiff_t>(n_) - 1, Rational(target_));
        return std::move(found_);
    }

private:
    void descend(std::ptrdiff_t level, Rational budget) {
        if (level < 0) {
            if (budget == Rational(0)) found_.push_back(coeff_);
            return;
        }
        const std::size_t j = static_cast<std::size_t>(level);
        const Rational z = shift_[j];
        auto cost = [&](Int t) {
            Rational w = Rational(t) + z;
            return diag_[j] * w * w;
        };
        // center of the feasible interval
        Int t0 = floor_div(checked_sub(z.den(), checked_mul(2, z.num())),
                           checked_mul(2, z.den()));  // nearest integer to -z
        for (Int t = t0; cost(t) <= budget; ++t) step(level, t, budget - cost(t));
        for (Int t = t0 - 1; cost(t) <= budget; --t) step(level, t, budget - cost(t));
    }

    void step(std::ptrdiff_t level, Int t, Rational remaining) {
        const std::size_t j = static_cast<std::size_t>(level);
        coeff_[j] = t;
        std::vector<Rational> saved;
        if (t != 0) {
            saved.assign(shift_.begin(), shift_.begin() + level);
            for (std::size_t i = 0; i < j; ++i)
                shift_[i] += lower_[j][i] * Rational(t);
        }
        descend(level - 1, remaining);
        if (t != 0)
            std::copy(saved.begin(), saved.end(), shift_.begin());
        coeff_[j] = 0;
    }

    const std::vector<std::vector<Rational>>& lower_;
    const std::vector<Rational>& diag_;
    Int target_;
    std::size_t n_;
    std::vector<Rational> shift_;
    std::vector<Int> coeff_;
    std::vector<std::vector<Int>> found_;
};

}  // namespace

std::vector<LatticeVector> vectors_of_norm(const std::vector<LatticeVector>& basis, Int m) {
    if (m < 1) throw std::invalid_argument("vectors_of_norm requires m >= 1");
    if (basis.empty()) return {};
    const std::size_t dim = basis[0].size();
    for (const auto& v : basis)
        if (v.size() != dim) throw std::invalid_argument("basis vectors must share a length");

    GramMatrix g = gram(basis);
    std::vector<std::vector<Int>> pos(g.size(), std::vector<Int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            pos[i][j] = checked_neg(g.at(i, j));

    std::vector<std::vector<Rational>> lower;
    std::vector<Rational> diag;
    if (!ldl_decompose(GramMatrix(std::move(pos)), lower, diag))
        throw std::invalid_argument("vectors_of_norm requires an independent basis");

    auto coeffs = NormEnumerator(lower, diag, m).run();

    std::vector<LatticeVector> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        std::vector<Int> v(dim, 0);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (c[k] == 0) continue;
            for (std::size_t d = 0; d < dim; ++d)
                v[d] = checked_add(v[d], checked_mul(c[k], basis[k][d]));
        }
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Backtracking chain search for one weight orientation.  Candidate vectors
// live in per-weight master lists (lex sorted); pools of surviving indices
// shrink as orthogonality constraints accumulate, so the first completed
// chain is the lexicographically least one.
class ChainSearch {
public:
    ChainSearch(const std::vector<Int>& weights,
                const std::map<Int, const std::vector<LatticeVector>*>& norm_lists)
        : weights_(weights) {
        for (const auto& [w, vecs] : norm_lists) {
            Store& st = store_[w];
            st.vecs = vecs;
            st.supports.resize(vecs->size());
            for (std::size_t i = 0; i < vecs->size(); ++i)
                for (std::size_t d = 0; d < (*vecs)[i].size(); ++d)
                    if ((*vecs)[i][d] != 0) st.supports[i].push_back(d);
        }
    }

    std::optional<std::vector<LatticeVector>> run() {
        Pools universe;
        for (const auto& [w, st] : store_) {
            auto& idx = universe[w];
            idx.resize(st.vecs->size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        }
        chain_.clear();
        if (search(0, universe)) return chain_;
        return std::nullopt;
    }

private:
    struct Store {
        const std::vector<LatticeVector>* vecs = nullptr;
        std::vector<std::vector<std::size_t>> supports;
    };
    using Pools = std::map<Int, std::vector<std::size_t>>;

    Int pair_with(const LatticeVector& dense, Int w, std::size_t idx) const {
        const Store& st = store_.at(w);
        const LatticeVector& v = (*st.vecs)[idx];
        Int acc = 0;
        for (std::size_t d : st.supports[idx])
            acc = checked_add(acc, checked_mul(dense[d], v[d]));
        return checked_neg(acc);
    }

    // pools = vectors pairing 0 with every link except the newest one;
    // chain_ holds the links chosen so far.
    bool search(std::size_t level, const Pools& pools) {
        if (level == weights_.size()) return true;

        const Pools* next = &pools;
        Pools filtered;
        if (level >= 1) {
            const LatticeVector& last = chain_.back();
            for (const auto& [w, idxs] : pools) {
                auto& keep = filtered[w];
                for (std::size_t i : idxs)
                    if (pair_with(last, w, i) == 0) keep.push_back(i);
                if (keep.empty() && needed_at_or_after(level + 1, w)) return false;
            }
            next = &filtered;
        }

        const Int w = weights_[level];
        auto it = pools.find(w);
        if (it == pools.end()) return false;
        for (std::size_t i : it->second) {
            if (level >= 1 && pair_with(chain_.back(), w, i) != 1) continue;
            chain_.push_back((*store_.at(w).vecs)[i]);
            if (search(level + 1, *next)) return true;
            chain_.pop_back();
        }
        return false;
    }

    bool needed_at_or_after(std::size_t level, Int w) const {
        for (std::size_t k = level; k < weights_.size(); ++k)
            if (weights_[k] == w) return true;
        return false;
    }

    const std::vector<Int>& weights_;
    std::map<Int, Store> store_;
    std::vector<LatticeVector> chain_;
};

}  // namespace

std::optional<std::vector<LatticeVector>> chain_witness_with_pools(
    const std::vector<LatticeVector>& basis, const LinearLattice& L,
    std::map<Int, std::vector<LatticeVector>>& pools) {
    std::map<Int, const std::vector<LatticeVector>*> needed;
    for (Int w : L.weights()) {
        auto it = pools.find(w);
        if (it == pools.end()) it = pools.emplace(w, vectors_of_norm(basis, w)).first;
        if (it->second.empty()) return std::nullopt;
        needed.emplace(w, &it->second);
    }

    if (auto chain = ChainSearch(L.weights(), needed).run()) return chain;
    if (!L.is_palindromic()) {
        auto rev = L.reversed();
        if (auto chain = ChainSearch(rev.weights(), needed).run()) return chain;
    }
    return std::nullopt;
}

std::optional<std::vector<LatticeVector>> is_isometric_to_linear(
    const std::vector<LatticeVector>& vectors, const LinearLattice& L) {
    auto basis = echelon_basis(vectors);
    if (basis.size() != L.rank())
        throw std::invalid_argument("is_isometric_to_linear: rank mismatch");

    // isometric lattices share their discriminant
    if (checked_abs(gram(basis).det()) != checked_abs(L.gram().det())) return std::nullopt;

    std::map<Int, std::vector<LatticeVector>> pools;
    return chain_witness_with_pools(basis, L, pools);
}

}  // namespace cmlat
