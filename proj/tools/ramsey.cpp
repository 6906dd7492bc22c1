// Command-line front end: one subcommand per engine operation, results
// emitted as schema-versioned JSON reports on stdout.
//
// Exit codes: 0 found/true, 1 not found/false, 2 capped/partial, 64 usage.

#include "ramsey/reference.hpp"
#include "ramsey/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kUsageError = 64;

using ramsey::AnyColoring;
using ramsey::BigInt;
using ramsey::Coloring;
using ramsey::GenSeq;
using ramsey::PolyFamily;
using ramsey::Report;
using ramsey::RuleColoring;
using ramsey::RunOptions;
using ramsey::WindowSet;

std::ifstream open_or_die(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    return in;
}

Coloring load_dense_coloring(const std::string& path) {
    auto in = open_or_die(path);
    AnyColoring c = ramsey::parse_coloring(in);
    if (!std::holds_alternative<Coloring>(c))
        throw std::invalid_argument("'" + path + "': this subcommand needs a dense coloring");
    return std::get<Coloring>(c);
}

RuleColoring load_rule(const std::string& rule_expr, const std::string& coloring_path) {
    if (!rule_expr.empty()) return ramsey::parse_rule_coloring(rule_expr);
    auto in = open_or_die(coloring_path);
    AnyColoring c = ramsey::parse_coloring(in);
    if (!std::holds_alternative<RuleColoring>(c))
        throw std::invalid_argument("'" + coloring_path + "': expected a rule coloring");
    return std::get<RuleColoring>(c);
}

WindowSet load_window_set(const std::string& path) {
    auto in = open_or_die(path);
    return ramsey::parse_window_set(in);
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::int64_t> out;
    std::int64_t v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad integer list '" + text + "'");
    return out;
}

PolyFamily family_from(const std::vector<std::string>& polys, const std::string& family) {
    std::string joined = family;
    for (const auto& p : polys) {
        if (!joined.empty()) joined += ";";
        joined += p;
    }
    return ramsey::parse_family(joined);
}

int emit(const Report& rep, const std::string& out_path, const std::string& witness_out) {
    if (!witness_out.empty()) {
        if (rep.witnesses.empty())
            throw std::invalid_argument("--witness-out given but the run produced no witness");
        std::ofstream out(witness_out);
        out << rep.witnesses.front().to_json().dump(2) << '\n';
    }
    std::string text = rep.to_json().dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << text;
    }
    std::cout << text;
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale search engine for arithmetic Ramsey patterns"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    RunOptions opt;
    std::string out_path, witness_out;
    app.add_option("--workers", opt.workers, "parallel worker count (0 = all cores)");
    app.add_option("--max-nodes", opt.caps.max_nodes, "search tree node cap");
    app.add_option("--bit-cap", opt.caps.bit_cap, "bits per exact value");
    app.add_option("--out", out_path, "also write the report to this file");
    app.add_option("--witness-out", witness_out, "write the first witness to this file");

    // ---- plain set computations ----
    std::string seq_text;
    auto* fs = app.add_subcommand("fs", "finite subset sums of a generator sequence");
    fs->add_option("--seq", seq_text)->required();
    auto* fp = app.add_subcommand("fp", "finite subset products of a generator sequence");
    fp->add_option("--seq", seq_text)->required();

    std::string fep_seq, fep_rule, fep_lists;
    std::vector<std::int64_t> fep_range;
    int fep_size = 2;
    bool fep_search_mode = false;
    auto* fep = app.add_subcommand("fep", "exponent towers of a sequence, or monochromatic FEP search");
    fep->add_option("--seq", fep_seq);
    fep->add_flag("--search", fep_search_mode, "search for a monochromatic FEP sequence");
    fep->add_option("--range", fep_range, "candidate range lo hi")->expected(2);
    fep->add_option("--size", fep_size, "sequence length for --search");
    fep->add_option("--rule", fep_rule, "rule coloring for --search");
    fep->add_option("--lists", fep_lists, "per-position candidate lists, ';'-separated");

    std::string y_text, x_text;
    auto* ssc = app.add_subcommand("sumsub-check", "is y a sum subsystem of x?");
    ssc->add_option("--y", y_text)->required();
    ssc->add_option("--x", x_text)->required();

    // ---- coloring searches ----
    std::string coloring_path, family_text;
    std::vector<std::string> poly_texts;
    bool no_anchor = false;
    auto* fc = app.add_subcommand("find-config", "least monochromatic polynomial configuration");
    fc->add_option("--coloring", coloring_path)->required();
    fc->add_option("--poly", poly_texts, "polynomial (repeatable)");
    fc->add_option("--family", family_text, "';'-separated polynomial family");
    fc->add_flag("--no-anchor", no_anchor, "drop the anchor a from the pattern");

    std::string th_kind = "poly";
    int th_k = 3, th_r = 2, th_max = 0;
    auto* th = app.add_subcommand("threshold", "least window where every coloring has a config");
    th->add_option("--kind", th_kind, "vdw | poly")->check(CLI::IsMember({"vdw", "poly"}));
    th->add_option("--k", th_k, "AP length for --kind vdw");
    th->add_option("--r", th_r)->required();
    th->add_option("--max", th_max)->required();
    th->add_option("--family", family_text, "family for --kind poly");
    th->add_option("--poly", poly_texts, "polynomial (repeatable, --kind poly)");
    th->add_flag("--no-anchor", no_anchor);

    bool schur_threshold_mode = false, schur_mult = false, schur_strict = false,
         schur_allow_equal = false;
    auto* sc = app.add_subcommand("schur", "Schur triple threshold or witness search");
    sc->add_flag("--threshold", schur_threshold_mode, "compute the threshold");
    sc->add_option("--r", th_r, "colors for --threshold");
    sc->add_option("--max", th_max, "window cap for --threshold");
    sc->add_option("--op", th_kind, "add | mult")->check(CLI::IsMember({"add", "mult"}));
    sc->add_option("--coloring", coloring_path, "coloring file for witness search");
    sc->add_flag("--strict", schur_strict, "threshold over distinct x < y");
    sc->add_flag("--allow-equal", schur_allow_equal, "witness search over x <= y");

    std::string rule_text;
    std::int64_t exp_xmax = 0, exp_ymax = 0;
    auto* ex = app.add_subcommand("exp-search", "least monochromatic {x, y, x^y}");
    ex->add_option("--rule", rule_text)->required();
    ex->add_option("--x-max", exp_xmax)->required();
    ex->add_option("--y-max", exp_ymax)->required();

    auto* hjs = app.add_subcommand("hj-search", "first monochromatic combinatorial line");
    hjs->add_option("--coloring", coloring_path)->required();

    int hj_r = 2, hj_t = 2, hj_max = 4;
    auto* hjn = app.add_subcommand("hj-number", "least N forcing a monochromatic line");
    hjn->add_option("--r", hj_r)->required();
    hjn->add_option("--t", hj_t)->required();
    hjn->add_option("--max", hj_max)->required();

    auto* pjs = app.add_subcommand("phj-search", "first monochromatic PHJ pattern");
    pjs->add_option("--coloring", coloring_path)->required();

    int phj_q = 2, phj_N = 2, phj_d = 1;
    std::string phj_xs, phj_gamma, phj_coeffs, phj_point;
    auto* pje = app.add_subcommand("phj-embed", "multilinear embedding of a PHJ pattern");
    pje->add_option("--q", phj_q)->required();
    pje->add_option("--N", phj_N)->required();
    pje->add_option("--d", phj_d)->required();
    pje->add_option("--xs", phj_xs, "N generators")->required();
    pje->add_option("--gamma", phj_gamma, "variable coordinate set")->required();
    pje->add_option("--coeffs", phj_coeffs, "d pattern coefficients")->required();
    pje->add_option("--point", phj_point, "flat point coordinates (default all ones)");

    std::string set_path, product_set_path;
    int lp_g = 1, lp_L = 1, ip_r = 1, r_max = 3, ss_N = 1;
    bool allow_repeats = false;
    auto* cr = app.add_subcommand("config-R", "the set R of good polynomial shifts");
    cr->add_option("--set", set_path)->required();
    cr->add_option("--family", family_text);
    cr->add_option("--poly", poly_texts);
    cr->add_option("--g", lp_g)->required();
    cr->add_option("--L", lp_L)->required();

    auto* ipc = app.add_subcommand("ipstar-check", "does the set meet every in-window IP_r set?");
    ipc->add_option("--set", set_path)->required();
    ipc->add_option("--r", ip_r)->required();
    ipc->add_flag("--allow-repeats", allow_repeats, "allow repeated generator entries");

    auto* ipv = app.add_subcommand("ipr-verify", "least r with the config set R IP_r*-in-window");
    ipv->add_option("--set", set_path)->required();
    ipv->add_option("--family", family_text);
    ipv->add_option("--poly", poly_texts);
    ipv->add_option("--g", lp_g)->required();
    ipv->add_option("--L", lp_L)->required();
    ipv->add_option("--r-max", r_max)->required();

    auto* sss = app.add_subcommand("sumsub-search", "sum subsystem with anchored pattern sets");
    sss->add_option("--set", set_path)->required();
    sss->add_option("--product-set", product_set_path, "multiplicative side constraint set");
    sss->add_option("--x", x_text)->required();
    sss->add_option("--family", family_text);
    sss->add_option("--poly", poly_texts);
    sss->add_option("--N", ss_N)->required();

    std::string tower_star, tower_f, tower_eval;
    auto* tw = app.add_subcommand("tower", "star operation, f_k towers, expression evaluation");
    tw->add_option("--star", tower_star, "n a b");
    tw->add_option("--f", tower_f, "k x");
    tw->add_option("--eval", tower_eval, "prefix tower expression, e.g. (^ 2 (^ 3 2))");

    std::int64_t pf_n = 2, lambda_N = 0;
    std::string pf_xs, lambda_a, lambda_bounds;
    std::vector<std::string> pf_families;
    int pf_kmax = 1;
    bool lambda_mode = false;
    auto* pf = app.add_subcommand("pf-pattern", "exponential pattern families");
    pf->add_flag("--lambda", lambda_mode, "check the lambda-exponent pattern instead");
    pf->add_option("--n", pf_n, "base of the star operation");
    pf->add_option("--xs", pf_xs, "generator sequence");
    pf->add_option("--family", pf_families, "polynomial family per index (repeatable)");
    pf->add_option("--k-max", pf_kmax);
    pf->add_option("--a", lambda_a, "sequence for --lambda");
    pf->add_option("--N", lambda_N, "lambda_1 bound for --lambda");
    pf->add_option("--f-bounds", lambda_bounds, "lambda_i bounds for --lambda");
    pf->add_option("--rule", rule_text, "rule coloring for --lambda");

    std::string witness_path;
    auto* vw = app.add_subcommand("verify-witness", "re-check an emitted certificate");
    vw->add_option("--witness", witness_path)->required();
    vw->add_option("--coloring", coloring_path, "dense or rule coloring context");
    vw->add_option("--rule", rule_text, "rule coloring context");
    vw->add_option("--set", set_path, "window set context (sumsub)");
    vw->add_option("--product-set", product_set_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsageError;
    }

    try {
        Report rep;
        if (fs->parsed()) {
            rep = ramsey::run_fs(ramsey::parse_genseq(seq_text));
        } else if (fp->parsed()) {
            rep = ramsey::run_fp(ramsey::parse_genseq(seq_text));
        } else if (fep->parsed()) {
            if (fep_search_mode) {
                RuleColoring rule = ramsey::parse_rule_coloring(fep_rule);
                if (!fep_lists.empty()) {
                    std::vector<std::vector<std::int64_t>> lists;
                    std::istringstream in(fep_lists);
                    std::string part;
                    while (std::getline(in, part, ';')) lists.push_back(parse_ints(part));
                    rep = ramsey::run_fep_search_lists(lists, rule, opt);
                } else {
                    if (fep_range.size() != 2)
                        throw std::invalid_argument("fep --search needs --range lo hi or --lists");
                    rep = ramsey::run_fep_search_range(fep_range[0], fep_range[1], fep_size, rule,
                                                       opt);
                }
            } else {
                if (fep_seq.empty()) throw std::invalid_argument("fep needs --seq or --search");
                rep = ramsey::run_fep(ramsey::parse_genseq(fep_seq), opt);
            }
        } else if (ssc->parsed()) {
            rep = ramsey::run_sumsub_check(ramsey::parse_genseq(y_text),
                                           ramsey::parse_genseq(x_text));
        } else if (fc->parsed()) {
            rep = ramsey::run_find_config(load_dense_coloring(coloring_path),
                                          family_from(poly_texts, family_text), !no_anchor, opt);
        } else if (th->parsed()) {
            if (th_kind == "vdw")
                rep = ramsey::run_threshold_vdw(th_k, th_r, th_max, opt);
            else
                rep = ramsey::run_threshold_poly(family_from(poly_texts, family_text), th_r,
                                                 th_max, !no_anchor, opt);
        } else if (sc->parsed()) {
            const bool mult = th_kind == "mult";
            if (schur_threshold_mode)
                rep = ramsey::run_schur_threshold(th_r, mult, th_max, !schur_strict, opt);
            else
                rep = ramsey::run_schur_find(load_dense_coloring(coloring_path), mult,
                                             schur_allow_equal);
        } else if (ex->parsed()) {
            rep = ramsey::run_exp_search(ramsey::parse_rule_coloring(rule_text), exp_xmax,
                                         exp_ymax, opt);
        } else if (hjs->parsed()) {
            auto in = open_or_die(coloring_path);
            auto cube = ramsey::parse_cube_coloring(in, opt.caps);
            if (!std::holds_alternative<ramsey::HjInstance>(cube))
                throw std::invalid_argument("hj-search needs an 'hj' cube coloring");
            rep = ramsey::run_hj_search(std::get<ramsey::HjInstance>(cube), opt);
        } else if (hjn->parsed()) {
            rep = ramsey::run_hj_number(hj_r, hj_t, hj_max, opt);
        } else if (pjs->parsed()) {
            auto in = open_or_die(coloring_path);
            auto cube = ramsey::parse_cube_coloring(in, opt.caps);
            if (!std::holds_alternative<ramsey::PhjInstance>(cube))
                throw std::invalid_argument("phj-search needs a 'phj' cube coloring");
            rep = ramsey::run_phj_search(std::get<ramsey::PhjInstance>(cube), opt);
        } else if (pje->parsed()) {
            ramsey::PhjShape shape(phj_q, phj_N, phj_d);
            ramsey::PhjPoint point;
            if (phj_point.empty()) {
                point.coords.assign(shape.total_coords, 1);
            } else {
                for (auto v : parse_ints(phj_point)) point.coords.push_back(std::uint8_t(v));
                if (point.coords.size() != shape.total_coords)
                    throw std::invalid_argument("--point needs " +
                                                std::to_string(shape.total_coords) + " coordinates");
            }
            ramsey::VarSet gamma;
            for (auto v : parse_ints(phj_gamma)) gamma.push_back(int(v));
            std::vector<BigInt> coeffs;
            for (auto v : parse_ints(phj_coeffs)) coeffs.emplace_back(v);
            rep = ramsey::run_phj_embed(shape, point, gamma, ramsey::parse_genseq(phj_xs), coeffs);
        } else if (cr->parsed()) {
            rep = ramsey::run_config_R(load_window_set(set_path),
                                       family_from(poly_texts, family_text), {lp_g, lp_L});
        } else if (ipc->parsed()) {
            rep = ramsey::run_ipstar_check(load_window_set(set_path), ip_r, !allow_repeats, opt);
        } else if (ipv->parsed()) {
            rep = ramsey::run_ipr_verify(load_window_set(set_path),
                                         family_from(poly_texts, family_text), {lp_g, lp_L}, r_max,
                                         opt);
        } else if (sss->parsed()) {
            WindowSet A = load_window_set(set_path);
            std::optional<WindowSet> B;
            if (!product_set_path.empty()) B = load_window_set(product_set_path);
            rep = ramsey::run_sumsub_search(A, B ? &*B : nullptr, ramsey::parse_genseq(x_text),
                                            family_from(poly_texts, family_text), ss_N, opt);
        } else if (tw->parsed()) {
            if (!tower_star.empty()) {
                auto v = parse_ints(tower_star);
                if (v.size() != 3) throw std::invalid_argument("tower --star needs 'n a b'");
                rep = ramsey::run_tower_star(v[0], BigInt(v[1]), BigInt(v[2]), opt);
            } else if (!tower_f.empty()) {
                auto v = parse_ints(tower_f);
                if (v.size() != 2) throw std::invalid_argument("tower --f needs 'k x'");
                rep = ramsey::run_tower_f(int(v[0]), v[1], opt);
            } else if (!tower_eval.empty()) {
                rep = ramsey::run_tower_eval(tower_eval, opt);
            } else {
                throw std::invalid_argument("tower needs --star, --f or --eval");
            }
        } else if (pf->parsed()) {
            if (lambda_mode) {
                std::vector<std::int64_t> bounds =
                    lambda_bounds.empty() ? std::vector<std::int64_t>{} : parse_ints(lambda_bounds);
                rep = ramsey::run_lambda_check(ramsey::parse_genseq(lambda_a), lambda_N, bounds,
                                               ramsey::parse_rule_coloring(rule_text), opt);
            } else {
                std::vector<PolyFamily> families;
                for (const auto& f : pf_families) families.push_back(ramsey::parse_family(f));
                rep = ramsey::run_pf_pattern(pf_n, ramsey::parse_genseq(pf_xs), families, pf_kmax,
                                             opt);
            }
        } else if (vw->parsed()) {
            auto win = open_or_die(witness_path);
            nlohmann::ordered_json j = nlohmann::ordered_json::parse(win);
            ramsey::Witness w = ramsey::Witness::from_json(j);
            ramsey::ValidationContext ctx;
            ctx.bit_cap = opt.caps.bit_cap;
            std::optional<Coloring> dense;
            std::optional<RuleColoring> rule;
            std::optional<WindowSet> A, B;
            if (!coloring_path.empty()) {
                auto cin = open_or_die(coloring_path);
                AnyColoring c = ramsey::parse_coloring(cin);
                if (std::holds_alternative<Coloring>(c)) {
                    dense = std::get<Coloring>(c);
                    ctx.coloring = &*dense;
                } else {
                    rule = std::get<RuleColoring>(c);
                    ctx.rule = &*rule;
                }
            }
            if (!rule_text.empty()) {
                rule = ramsey::parse_rule_coloring(rule_text);
                ctx.rule = &*rule;
            }
            if (!set_path.empty()) {
                A = load_window_set(set_path);
                ctx.set_a = &*A;
            }
            if (!product_set_path.empty()) {
                B = load_window_set(product_set_path);
                ctx.set_b = &*B;
            }
            rep = ramsey::run_verify_witness(w, ctx);
        }
        return emit(rep, out_path, witness_out);
    } catch (const ramsey::ResourceCapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 2;
    } catch (const ramsey::BitCapExceeded& e) {
        std::cerr << "bit cap: " << e.what() << '\n';
        return 2;
    } catch (const ramsey::TowerChainOverflow& e) {
        std::cerr << "bit cap: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}
