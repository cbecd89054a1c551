// cmlat: command-line front end for the changemaker-lattice toolkit.
//
// Exit codes: 0 = computed, positive answer; 1 = computed, negative answer
// (obstruction found / not realized / validation failed); 2 = usage or
// input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmlat/alexander.hpp"
#include "cmlat/cables.hpp"
#include "cmlat/changemaker.hpp"
#include "cmlat/dinvariants.hpp"
#include "cmlat/lattice.hpp"
#include "cmlat/rational.hpp"
#include "cmlat/realization.hpp"

namespace {

using cmlat::Int;
using nlohmann::json;

enum class Format { human, json_out, csv };

struct Options {
    bool as_json = false;
    bool as_csv = false;
    Format format() const {
        if (as_json) return Format::json_out;
        if (as_csv) return Format::csv;
        return Format::human;
    }
};

int exit_code = 0;

std::string join(const std::vector<Int>& v, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        out.push_back(std::stoll(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const Options& opt, const json& j, const std::string& human) {
    if (opt.format() == Format::csv)
        throw CLI::ValidationError("--csv is only supported for realize and scan");
    if (opt.format() == Format::json_out)
        std::cout << j.dump() << "\n";
    else
        std::cout << human;
}

json witness_json(const cmlat::ScanRecord& rec, const std::optional<cmlat::RealizationWitness>& w) {
    json j = json::parse(cmlat::scan_record_json(rec));
    if (w) {
        json chain = json::array();
        for (const auto& v : w->chain) chain.push_back(v.coords);
        j["chain"] = chain;
    }
    return j;
}

// ---- subcommand implementations ----

void run_cm_check(const Options& opt, const std::vector<Int>& sigma) {
    bool ok = cmlat::is_changemaker(sigma);
    json j{{"sigma", sigma}, {"changemaker", ok}};
    std::ostringstream human;
    human << "changemaker " << (ok ? "true" : "false") << "\n";
    if (ok) {
        cmlat::Changemaker cm(sigma);
        j["norm"] = cm.norm_p();
        j["l1"] = cm.l1();
        j["genus"] = cmlat::sharp_genus(cm);
        human << "norm " << cm.norm_p() << "\nl1 " << cm.l1() << "\ngenus "
              << cmlat::sharp_genus(cm) << "\n";
    } else {
        exit_code = 1;
    }
    emit(opt, j, human.str());
}

void run_cm_enum(const Options& opt, Int p, Int length, bool allow_zeros) {
    std::optional<std::size_t> len;
    if (length >= 0) len = static_cast<std::size_t>(length);
    auto cms = cmlat::enumerate_changemakers(p, len, allow_zeros);
    json list = json::array();
    std::ostringstream human;
    for (const auto& cm : cms) {
        list.push_back(cm.sigma());
        human << join(cm.sigma()) << "\n";
    }
    json j{{"p", p}, {"count", cms.size()}, {"changemakers", list}};
    emit(opt, j, human.str());
}

void run_cm_change(const Options& opt, Int k, const std::vector<Int>& sigma) {
    cmlat::Changemaker cm(sigma);
    auto subset = cmlat::make_change(cm, k);
    std::vector<Int> indices(subset.indices.begin(), subset.indices.end());
    json j{{"sigma", sigma}, {"k", k}, {"subset", indices}};
    std::ostringstream human;
    human << "subset " << (indices.empty() ? std::string("(empty)") : join(indices)) << "\n";
    emit(opt, j, human.str());
}

void run_alex_validate(const Options& opt, const std::string& poly) {
    auto P = cmlat::poly_from_text(poly);
    bool ok = cmlat::validate_lspace_form(P);
    if (!ok) exit_code = 1;
    json j{{"poly", cmlat::poly_to_text(P)}, {"lspace_form", ok}, {"genus", cmlat::genus(P)}};
    std::ostringstream human;
    human << "lspace_form " << (ok ? "true" : "false") << "\ngenus " << cmlat::genus(P) << "\n";
    emit(opt, j, human.str());
}

void run_alex_torsion(const Options& opt, const std::string& poly, Int i) {
    auto P = cmlat::poly_from_text(poly);
    Int t = cmlat::torsion(P, i);
    json j{{"poly", cmlat::poly_to_text(P)},
           {"i", i},
           {"torsion", t},
           {"validated", cmlat::validate_lspace_form(P)}};
    std::ostringstream human;
    human << "torsion " << t << "\n";
    if (!cmlat::validate_lspace_form(P)) human << "warning: polynomial not in L-space form\n";
    emit(opt, j, human.str());
}

void run_alex_torus(const Options& opt, Int r, Int s) {
    auto P = cmlat::torus_poly(r, s);
    json j{{"r", r}, {"s", s}, {"poly", cmlat::poly_to_text(P)}, {"genus", cmlat::genus(P)}};
    std::ostringstream human;
    human << cmlat::poly_to_text(P) << "\n";
    emit(opt, j, human.str());
}

void run_alex_cable_genus(const Options& opt, Int q, Int r, Int g) {
    Int res = cmlat::cable_genus(q, r, g);
    bool lspace = cmlat::cable_lspace_criterion(q, r, g);
    json j{{"q", q}, {"r", r}, {"companion_genus", g}, {"genus", res}, {"lspace_cable", lspace}};
    std::ostringstream human;
    human << "genus " << res << "\nlspace_cable " << (lspace ? "true" : "false") << "\n";
    emit(opt, j, human.str());
}

void run_dinv_unknot(const Options& opt, Int p, Int i) {
    auto d = cmlat::d_unknot(p, i);
    json j{{"p", p}, {"i", i}, {"d", d.str()}};
    std::ostringstream human;
    human << "d " << d.str() << "\n";
    emit(opt, j, human.str());
}

void run_dinv_surgery(const Options& opt, Int p, Int i, const std::string& poly) {
    auto P = cmlat::poly_from_text(poly);
    auto d = cmlat::d_lspace_surgery(p, i, P);
    auto du = cmlat::d_unknot(p, i);
    Int rep = std::min(i, p - i);
    json j{{"p", p},          {"i", i},
           {"poly", cmlat::poly_to_text(P)}, {"d", d.str()},
           {"d_unknot", du.str()},           {"torsion", cmlat::torsion(P, rep)}};
    std::ostringstream human;
    human << "d " << d.str() << "\n";
    emit(opt, j, human.str());
}

void run_dinv_lemma_c(const Options& opt, const std::string& sigma_text, const std::string& poly,
                      Int box) {
    cmlat::Changemaker sigma(parse_int_list(sigma_text));
    auto P = cmlat::poly_from_text(poly);
    auto report = cmlat::lemma_c_check(sigma, P, box);
    if (report.violation_found) exit_code = 1;

    json labels = json::array();
    std::ostringstream human;
    human << "p " << report.p << "\nsigma " << join(report.sigma) << "\nbox " << report.box
          << "\nviolation " << (report.violation_found ? "true" : "false") << "\n";
    for (const auto& row : report.labels) {
        json lj{{"i", row.i}, {"torsion", row.torsion}, {"violated", row.violated}};
        human << "label " << row.i << " torsion " << row.torsion;
        if (row.violation) {
            lj["violation"] = row.violation->coords;
            human << " VIOLATION c=" << join(row.violation->coords);
        }
        if (row.equality) {
            lj["equality_witness"] = row.equality->coords;
            human << " equality c=" << join(row.equality->coords);
        } else if (!row.violated) {
            human << " no equality witness in box";
        }
        human << "\n";
        labels.push_back(lj);
    }
    if (!report.all_labels_witnessed)
        human << "note: missing witnesses are box-bounded evidence, not proof\n";
    json j{{"p", report.p},
           {"sigma", report.sigma},
           {"box", report.box},
           {"violation", report.violation_found},
           {"all_labels_witnessed", report.all_labels_witnessed},
           {"labels", labels}};
    emit(opt, j, human.str());
}

void run_bounds(const Options& opt, Int p) {
    Int ns = cmlat::bound_nonsharp(p);
    Int sh = cmlat::bound_sharp(p);
    json j{{"p", p}, {"nonsharp", ns}, {"sharp", sh}};
    std::ostringstream human;
    human << "nonsharp " << ns << "\nsharp " << sh << "\n";
    emit(opt, j, human.str());
}

void run_family(const Options& opt, Int n) {
    auto stage = cmlat::family(n);
    json cables = json::array();
    for (Int a : stage.a) cables.push_back(json::array({2, a}));
    json j{{"n", stage.n},         {"a", stage.a},
           {"p", stage.p},         {"sigma", stage.sigma},
           {"genus", stage.genus}, {"degenerate", stage.degenerate},
           {"cables", cables}};
    std::ostringstream human;
    human << "n " << stage.n << "\na " << join(stage.a) << "\np " << stage.p << "\nsigma "
          << join(stage.sigma) << "\ngenus " << stage.genus << "\ndegenerate "
          << (stage.degenerate ? "true" : "false") << "\n";
    emit(opt, j, human.str());
}

void run_realize(const Options& opt, Int p, Int q) {
    auto w = cmlat::realize(p, q);
    cmlat::ScanRecord rec;
    rec.p = p;
    rec.q = q;
    rec.weights = cmlat::hj_expand(p, q).weights();
    if (w) {
        rec.realized = true;
        rec.sigma = w->sigma.sigma();
        rec.genus = w->genus;
        rec.berge_ok = cmlat::berge_bound(p, w->genus);
    } else {
        exit_code = 1;
    }

    if (opt.format() == Format::csv) {
        std::cout << cmlat::scan_csv_header() << "\n" << cmlat::scan_record_csv(rec) << "\n";
        return;
    }
    if (opt.format() == Format::json_out) {
        std::cout << witness_json(rec, w).dump() << "\n";
        return;
    }
    if (!w) {
        std::cout << "not realized\n";
        return;
    }
    std::cout << "realized true\nweights " << join(rec.weights) << "\nsigma " << join(*rec.sigma)
              << "\ngenus " << *rec.genus << "\nberge_ok " << (*rec.berge_ok ? "true" : "false")
              << "\n";
    for (const auto& v : w->chain) std::cout << "chain " << join(v.coords) << "\n";
}

void run_scan(const Options& opt, Int p_max, int workers, const std::string& out_file) {
    auto records = cmlat::scan(p_max, workers);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file) throw CLI::ValidationError("cannot open output file " + out_file);
        os = &file;
    }

    if (opt.format() == Format::json_out) {
        for (const auto& rec : records) *os << cmlat::scan_record_json(rec) << "\n";
    } else {
        *os << cmlat::scan_csv_header() << "\n";
        for (const auto& rec : records) *os << cmlat::scan_record_csv(rec) << "\n";
    }

    auto violations = cmlat::berge_violations(records);
    std::cerr << "pairs " << records.size() << ", berge violations " << violations.size() << "\n";
    for (const auto& rec : violations)
        std::cerr << "violation p=" << rec.p << " q=" << rec.q << " genus=" << *rec.genus << "\n";
}

void run_gt(const Options& opt, Int p) {
    auto maximizer = cmlat::goda_teragaito_maximizer(p);
    Int value = cmlat::goda_teragaito_max(p);
    json j{{"p", p}, {"value", value}, {"maximizer", maximizer.sigma()}};
    std::ostringstream human;
    human << "max_2g_minus_1 " << value << "\nmaximizer " << join(maximizer.sigma()) << "\n";
    emit(opt, j, human.str());
}

void emit_cabsum(const Options& opt, const cmlat::CablingSumData& d) {
    json j{{"kind", d.kind},
           {"p", d.p},
           {"q", d.q},
           {"slope", d.slope},
           {"orders", json::array({d.orders.first, d.orders.second})},
           {"summands", json::array({json::array({d.summand1.first, d.summand1.second}),
                                     json::array({d.summand2.first, d.summand2.second})})},
           {"orientation", "opposite"}};
    if (d.kind == "cable") {
        j["r"] = d.r;
        j["s"] = d.s;
        j["sign"] = d.sign;
    }
    std::ostringstream human;
    human << "kind " << d.kind << "\np " << d.p << "\nq " << d.q << "\nslope " << d.slope
          << "\norders " << d.orders.first << "," << d.orders.second << "\nsummands L("
          << d.summand1.first << "," << d.summand1.second << ") # L(" << d.summand2.first << ","
          << d.summand2.second << ")\norientation opposite\n";
    emit(opt, j, human.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"changemaker-lattice obstructions for integer surgeries"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable JSON output");
    app.add_flag("--csv", opt.as_csv, "CSV output (realize and scan only)");

    // cm
    auto* cm = app.add_subcommand("cm", "changemaker vectors");
    cm->require_subcommand(1);
    static std::vector<Int> cm_sigma;
    static Int cm_p = 0, cm_k = 0, cm_length = -1;
    static bool cm_zeros = false;

    auto* cm_check = cm->add_subcommand("check", "test the changemaker condition");
    cm_check->add_option("sigma", cm_sigma, "non-decreasing tuple")->required();
    cm_check->callback([&] { run_cm_check(opt, cm_sigma); });

    auto* cm_enum = cm->add_subcommand("enum", "enumerate changemakers of norm p");
    cm_enum->add_option("p", cm_p, "norm")->required();
    cm_enum->add_option("--length", cm_length, "fixed tuple length");
    cm_enum->add_flag("--allow-zeros", cm_zeros, "admit zero coordinates (needs --length)");
    cm_enum->callback([&] { run_cm_enum(opt, cm_p, cm_length, cm_zeros); });

    auto* cm_change = cm->add_subcommand("change", "make exact change greedily");
    cm_change->add_option("k", cm_k, "amount")->required();
    cm_change->add_option("sigma", cm_sigma, "changemaker tuple")->required();
    cm_change->callback([&] { run_cm_change(opt, cm_k, cm_sigma); });

    // alex
    auto* alex = app.add_subcommand("alex", "Alexander polynomials and torsion");
    alex->require_subcommand(1);
    static std::string alex_poly;
    static Int alex_i = 0, alex_r = 0, alex_s = 0, alex_q = 0, alex_g = 0;

    auto* alex_validate = alex->add_subcommand("validate", "check L-space coefficient form");
    alex_validate->add_option("poly", alex_poly, "a_0,a_1,...,a_g")->required();
    alex_validate->callback([&] { run_alex_validate(opt, alex_poly); });

    auto* alex_torsion = alex->add_subcommand("torsion", "torsion coefficient t_i");
    alex_torsion->add_option("poly", alex_poly, "a_0,a_1,...,a_g")->required();
    alex_torsion->add_option("i", alex_i, "index")->required();
    alex_torsion->callback([&] { run_alex_torsion(opt, alex_poly, alex_i); });

    auto* alex_torus = alex->add_subcommand("torus", "torus knot polynomial");
    alex_torus->add_option("r", alex_r)->required();
    alex_torus->add_option("s", alex_s)->required();
    alex_torus->callback([&] { run_alex_torus(opt, alex_r, alex_s); });

    auto* alex_cable = alex->add_subcommand("cable-genus", "genus of a (q,r)-cable");
    alex_cable->add_option("q", alex_q)->required();
    alex_cable->add_option("r", alex_r)->required();
    alex_cable->add_option("g", alex_g, "companion genus")->required();
    alex_cable->callback([&] { run_alex_cable_genus(opt, alex_q, alex_r, alex_g); });

    // dinv
    auto* dinv = app.add_subcommand("dinv", "correction terms");
    dinv->require_subcommand(1);
    static Int dinv_p = 0, dinv_i = 0, dinv_box = 3;
    static std::string dinv_poly, dinv_sigma;

    auto* dinv_unknot = dinv->add_subcommand("unknot", "d(U_p, i)");
    dinv_unknot->add_option("p", dinv_p)->required();
    dinv_unknot->add_option("i", dinv_i)->required();
    dinv_unknot->callback([&] { run_dinv_unknot(opt, dinv_p, dinv_i); });

    auto* dinv_surgery = dinv->add_subcommand("surgery", "d(K_p, i) for an L-space knot");
    dinv_surgery->add_option("p", dinv_p)->required();
    dinv_surgery->add_option("i", dinv_i)->required();
    dinv_surgery->add_option("poly", dinv_poly, "a_0,a_1,...,a_g")->required();
    dinv_surgery->callback([&] { run_dinv_surgery(opt, dinv_p, dinv_i, dinv_poly); });

    auto* dinv_lemma = dinv->add_subcommand("lemma-c", "covector obstruction test");
    dinv_lemma->add_option("sigma", dinv_sigma, "comma-separated changemaker")->required();
    dinv_lemma->add_option("poly", dinv_poly, "a_0,a_1,...,a_g")->required();
    dinv_lemma->add_option("--box", dinv_box, "coordinate bound for the covector search");
    dinv_lemma->callback([&] { run_dinv_lemma_c(opt, dinv_sigma, dinv_poly, dinv_box); });

    // top-level commands
    static Int arg_p = 0, arg_q = 0, arg_n = 0, arg_pmax = 0;
    static int scan_workers = 1;
    static std::string scan_out;

    auto* bounds = app.add_subcommand("bounds", "genus bounds at slope p");
    bounds->add_option("p", arg_p)->required();
    bounds->callback([&] { run_bounds(opt, arg_p); });

    auto* fam = app.add_subcommand("family", "extremal iterated-cable stage");
    fam->add_option("n", arg_n)->required();
    fam->callback([&] { run_family(opt, arg_n); });

    auto* realize_cmd = app.add_subcommand("realize", "changemaker complement test for (p,q)");
    realize_cmd->add_option("p", arg_p)->required();
    realize_cmd->add_option("q", arg_q)->required();
    realize_cmd->callback([&] { run_realize(opt, arg_p, arg_q); });

    auto* scan_cmd = app.add_subcommand("scan", "realize every coprime pair up to p_max");
    scan_cmd->add_option("pmax", arg_pmax)->required();
    scan_cmd->add_option("--workers", scan_workers, "worker threads (output is identical)");
    scan_cmd->add_option("--out", scan_out, "write records to a file instead of stdout");
    scan_cmd->callback([&] { run_scan(opt, arg_pmax, scan_workers, scan_out); });

    auto* gt = app.add_subcommand("gt", "largest 2g-1 over changemakers of norm p");
    gt->add_option("p", arg_p)->required();
    gt->callback([&] { run_gt(opt, arg_p); });

    auto* cabsum = app.add_subcommand("cabsum", "lens summand bookkeeping");
    cabsum->require_subcommand(1);
    static Int cs_p = 0, cs_q = 0, cs_r = 0, cs_s = 0, cs_sign = 1;

    auto* cabsum_torus = cabsum->add_subcommand("torus", "(p,q)-torus knot, slope pq");
    cabsum_torus->add_option("p", cs_p)->required();
    cabsum_torus->add_option("q", cs_q)->required();
    cabsum_torus->callback([&] { emit_cabsum(opt, cmlat::cabling_sum_torus(cs_p, cs_q)); });

    auto* cabsum_cable = cabsum->add_subcommand("cable", "(p,q)-cable of an (r,s)-torus knot");
    cabsum_cable->add_option("q", cs_q)->required();
    cabsum_cable->add_option("r", cs_r)->required();
    cabsum_cable->add_option("s", cs_s)->required();
    cabsum_cable->add_option("sign", cs_sign, "+1 or -1 in p = qrs +- 1")->required();
    cabsum_cable->callback(
        [&] { emit_cabsum(opt, cmlat::cabling_sum_cable(cs_q, cs_r, cs_s, cs_sign)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
