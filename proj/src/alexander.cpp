#include "cmlat/alexander.hpp"

#include <sstream>

namespace cmlat {

AlexanderPoly::AlexanderPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.size() % 2 == 0)
        throw std::invalid_argument("coefficient list must have odd length 2g+1");
    g_ = static_cast<Int>(coeffs_.size() / 2);
    for (Int j = 1; j <= g_; ++j)
        if (coeffs_[static_cast<std::size_t>(g_ + j)] != coeffs_[static_cast<std::size_t>(g_ - j)])
            throw std::invalid_argument("coefficients must be symmetric");
    if (g_ > 0 && coeffs_.back() == 0)
        throw std::invalid_argument("leading coefficient must be nonzero");
    if (g_ == 0 && coeffs_[0] == 0)
        throw std::invalid_argument("zero polynomial is not allowed");
}

AlexanderPoly AlexanderPoly::from_half(const std::vector<Int>& half) {
    if (half.empty()) throw std::invalid_argument("empty coefficient list");
    std::vector<Int> full(2 * half.size() - 1);
    const std::size_t g = half.size() - 1;
    for (std::size_t j = 0; j < half.size(); ++j) {
        full[g + j] = half[j];
        full[g - j] = half[j];
    }
    return AlexanderPoly(std::move(full));
}

bool validate_lspace_form(const AlexanderPoly& P) {
    Int prev = 0;
    bool first = true;
    for (Int j = P.degree(); j >= -P.degree(); --j) {
        Int a = P.coeff(j);
        if (a == 0) continue;
        if (a != 1 && a != -1) return false;
        if (first && a != 1) return false;
        if (!first && a == prev) return false;
        prev = a;
        first = false;
    }
    return !first;
}

Int torsion(const AlexanderPoly& P, Int i) {
    if (i < 0) throw std::invalid_argument("torsion index must be non-negative");
    Int t = 0;
    for (Int j = 1; i + j <= P.degree(); ++j)
        t = checked_add(t, checked_mul(j, P.coeff(i + j)));
    return t;
}

TorsionProfile torsion_profile(const AlexanderPoly& P) {
    TorsionProfile tp;
    tp.genus = P.degree();
    tp.values.reserve(static_cast<std::size_t>(tp.genus) + 1);
    for (Int i = 0; i <= tp.genus; ++i) tp.values.push_back(torsion(P, i));
    return tp;
}

Int genus(const AlexanderPoly& P) { return P.degree(); }

namespace {

// dense polynomial in T with non-negative exponents
using Poly = std::vector<Int>;

Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
    return c;
}

// T^n - 1
Poly cyclo_like(Int n) {
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    return p;
}

Poly divide_exact(Poly num, const Poly& den) {
    Poly quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int c = exact_div(num[k + den.size() - 1], den.back());
        quot[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                num[k + j] = checked_sub(num[k + j], checked_mul(c, den[j]));
    }
    for (Int r : num)
        if (r != 0) throw std::logic_error("polynomial division left a remainder");
    return quot;
}

}  // namespace

AlexanderPoly torus_poly(Int r, Int s) {
    if (r < 2 || s < 2) throw std::invalid_argument("torus_poly requires r,s >= 2");
    if (gcd_int(r, s) != 1) throw std::invalid_argument("torus_poly requires gcd(r,s) = 1");
    Poly num = mul(cyclo_like(checked_mul(r, s)), cyclo_like(1));
    Poly den = mul(cyclo_like(r), cyclo_like(s));
    Poly q = divide_exact(std::move(num), den);
    // q has degree (r-1)(s-1); recentering makes it symmetric about 0
    return AlexanderPoly(std::move(q));
}

AlexanderPoly unknot_poly() { return AlexanderPoly({1}); }

Int cable_genus(Int q, Int r, Int g_companion) {
    if (q < 2) throw std::invalid_argument("cable_genus requires q >= 2");
    if (r < 1) throw std::invalid_argument("cable_genus requires r >= 1");
    if (g_companion < 0) throw std::invalid_argument("companion genus must be non-negative");
    // 2g = qr + q(2 g_companion - 1) - r + 1
    Int twice = checked_add(
        checked_sub(checked_add(checked_mul(q, r),
                                checked_mul(q, checked_sub(checked_mul(2, g_companion), 1))),
                    r),
        1);
    if (twice % 2 != 0) throw std::domain_error("cable genus parity violation");
    Int g = twice / 2;
    if (g < 0) throw std::domain_error("cable genus is negative");
    return g;
}

bool cable_lspace_criterion(Int q, Int r, Int g_companion) {
    if (q < 2) throw std::invalid_argument("cable_lspace_criterion requires q >= 2");
    return checked_mul(q, checked_sub(checked_mul(2, g_companion), 1)) < r;
}

std::string poly_to_text(const AlexanderPoly& P) {
    std::string out;
    for (Int j = 0; j <= P.degree(); ++j) {
        if (j) out += ',';
        out += std::to_string(P.coeff(j));
    }
    return out;
}

AlexanderPoly poly_from_text(const std::string& text) {
    std::vector<Int> half;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        Int v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad coefficient: " + item);
        half.push_back(v);
    }
    if (half.empty()) throw std::invalid_argument("empty polynomial text");
    return AlexanderPoly::from_half(half);
}

}  // namespace cmlat
