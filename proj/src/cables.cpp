#include "cmlat/cables.hpp"

#include "cmlat/alexander.hpp"

namespace cmlat {

CableStage family(Int n) {
    if (n < 1) throw std::invalid_argument("family requires n >= 1");
    CableStage stage;
    stage.n = n;
    Int p = 0;  // p_0
    Int g = 0;  // g_0
    for (Int k = 1; k <= n; ++k) {
        Int a = checked_add(checked_mul(2, p), 1);
        p = checked_sub(checked_mul(2, a), 1);
        g = cable_genus(2, a, g);
        stage.a.push_back(a);
    }
    stage.p = p;
    stage.genus = g;
    stage.degenerate = (n == 1);
    Int power = 1;
    for (Int k = 0; k < n; ++k) {
        stage.sigma.push_back(power);
        power = checked_mul(power, 2);
    }
    return stage;
}

GramMatrix linking_matrix(Int n) {
    if (n < 2) throw std::invalid_argument("linking_matrix requires n >= 2");
    const std::size_t size = static_cast<std::size_t>(n) - 1;
    std::vector<std::vector<Int>> m(size, std::vector<Int>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
        m[i][i] = -5;
        if (i + 1 < size) m[i][i + 1] = m[i + 1][i] = 2;
    }
    return GramMatrix(std::move(m));
}

bool verify_stage(const CableStage& stage) {
    if (stage.n < 2) throw std::invalid_argument("verify_stage requires n >= 2");
    const std::size_t n = static_cast<std::size_t>(stage.n);
    LatticeVector sigma(stage.sigma);

    // chain vectors 2e_i - e_{i+1} in -Z^n
    std::vector<LatticeVector> chain;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Int> v(n, 0);
        v[i] = 2;
        v[i + 1] = -1;
        chain.emplace_back(std::move(v));
    }

    if (gram(chain) != linking_matrix(stage.n)) return false;
    for (const auto& v : chain)
        if (inner_product(v, sigma) != 0) return false;

    Int pow4 = checked_add(checked_mul(3, stage.p), 1);
    Int root = isqrt_floor(pow4);
    if (checked_mul(root, root) != pow4) return false;
    if (checked_sub(checked_mul(2, stage.genus), 1) != checked_sub(stage.p, root)) return false;

    return sharp_genus(stage.changemaker()) == stage.genus;
}

}  // namespace cmlat
