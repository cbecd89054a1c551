#include "cmlat/dinvariants.hpp"

#include <algorithm>

namespace cmlat {

SpincLabel spinc_label(const CharCovector& c, const Changemaker& sigma, Int p) {
    if (c.size() != sigma.length()) throw std::invalid_argument("spinc_label length mismatch");
    if (p < 1) throw std::invalid_argument("spinc_label requires p >= 1");
    if (sigma.norm_p() != p)
        throw std::invalid_argument("spinc_label requires <sigma,sigma> = -p");
    Int pairing = inner_product(c.as_vector(), sigma.as_vector());
    Int s = checked_add(pairing, p);
    if (pos_mod(s, 2) != 0) throw std::invalid_argument("spinc_label parity failure");
    return SpincLabel(pos_mod(s / 2, p), p);
}

CorrectionTerm d_unknot(Int p, Int i) {
    if (p < 1) throw std::invalid_argument("d_unknot requires p >= 1");
    if (i < 0 || i >= p) throw std::invalid_argument("d_unknot label out of range");
    Int v = checked_sub(checked_mul(2, i), p);
    return Rational(checked_sub(checked_mul(v, v), p), checked_mul(4, p));
}

CorrectionTerm d_lspace_surgery(Int p, Int i, const AlexanderPoly& P) {
    if (!validate_lspace_form(P))
        throw std::invalid_argument("d_lspace_surgery requires an L-space form polynomial");
    Int rep = std::min(i, checked_sub(p, i));  // reduce to |i| <= p/2
    return d_unknot(p, i) - Rational(checked_mul(2, torsion(P, rep)));
}

LemmaCReport lemma_c_check(const Changemaker& sigma, const AlexanderPoly& P, Int box) {
    if (box < 1) throw std::invalid_argument("lemma_c_check box must be >= 1");
    if (!validate_lspace_form(P))
        throw std::invalid_argument("lemma_c_check requires an L-space form polynomial");
    const Int p = sigma.norm_p();
    const std::size_t len = sigma.length();
    const Int rank_term = static_cast<Int>(len);  // n + 1

    LemmaCReport report;
    report.p = p;
    report.sigma = sigma.sigma();
    report.box = box;

    // labels i in (-p/2, p/2]; row index = i - lo
    const Int lo = -((p - 1) / 2);
    const Int hi = p / 2;
    for (Int i = lo; i <= hi; ++i)
        report.labels.push_back(LemmaCLabel{i, torsion(P, i < 0 ? -i : i)});

    std::vector<Int> odd_values;
    for (Int v = -box; v <= box; ++v)
        if (pos_mod(v, 2) == 1) odd_values.push_back(v);
    const std::size_t radix = odd_values.size();

    // lexicographic sweep over the covector box, so the first covector
    // recorded per label is the least one
    std::vector<std::size_t> digit(len, 0);
    std::vector<Int> c(len, odd_values.front());
    bool more = true;
    while (more) {
        Int pairing = 0, sq = 0;
        for (std::size_t j = 0; j < len; ++j) {
            pairing = checked_add(pairing, checked_mul(c[j], sigma.sigma()[j]));
            sq = checked_add(sq, checked_mul(c[j], c[j]));
        }
        Int csq = checked_neg(sq);                      // c^2
        Int residue = pos_mod((p - pairing) / 2, p);    // label of <c,sigma> = -pairing
        Int i = residue <= hi ? residue : residue - p;  // representative in (-p/2, p/2]
        LemmaCLabel& row = report.labels[static_cast<std::size_t>(i - lo)];

        Int lhs = checked_add(csq, rank_term);
        Int rhs = checked_mul(-8, row.torsion);
        if (lhs > rhs) {
            row.violated = true;
            if (!row.violation) row.violation = CharCovector(c);
        } else if (lhs == rhs && !row.equality) {
            row.equality = CharCovector(c);
        }

        more = false;
        for (std::size_t j = len; j-- > 0;) {
            if (digit[j] + 1 < radix) {
                ++digit[j];
                c[j] = odd_values[digit[j]];
                more = true;
                break;
            }
            digit[j] = 0;
            c[j] = odd_values.front();
        }
    }

    report.violation_found = false;
    report.all_labels_witnessed = true;
    for (const auto& row : report.labels) {
        if (row.violated) report.violation_found = true;
        if (!row.equality) report.all_labels_witnessed = false;
    }
    return report;
}

Int max_genus_from_sign_vectors(const Changemaker& sigma) {
    // the sign vector of a changemaker is all ones
    CharCovector sign(std::vector<Int>(sigma.length(), 1));
    SpincLabel label = spinc_label(sign, sigma, sigma.norm_p());
    return label.i;
}

}  // namespace cmlat
