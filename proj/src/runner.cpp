#include "ramsey/runner.hpp"

#include <chrono>

namespace ramsey {

namespace {

using json = nlohmann::ordered_json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json caps_json(const SearchCaps& caps) {
    return json{{"max_nodes", caps.max_nodes},
                {"bit_cap", caps.bit_cap},
                {"max_family", caps.max_family},
                {"dense_points_cap", caps.dense_points_cap}};
}

json bigset_json(const std::set<BigInt>& s) {
    json out = json::array();
    for (const auto& v : s) out.push_back(v.str());
    return out;
}

json seq_json(const std::vector<std::int64_t>& xs) {
    json out = json::array();
    for (auto v : xs) out.push_back(v);
    return out;
}

json family_json(const PolyFamily& F) {
    json out = json::array();
    for (const auto& p : F) out.push_back(print_poly(p));
    return out;
}

void finish(Report& rep, const Timer& timer, int workers, std::uint64_t nodes = 0) {
    rep.perf["elapsed_ms"] = timer.ms();
    rep.perf["workers"] = workers;
    if (nodes) rep.perf["nodes"] = nodes;
}

}  // namespace

Report run_fs(const GenSeq& s) {
    Timer timer;
    Report rep;
    rep.subcommand = "fs";
    rep.params["seq"] = seq_json(s.xs);
    rep.result["values"] = bigset_json(finite_sums(s));
    rep.status = Report::Status::found;
    rep.provenance["search_order"] = "subset enumeration";
    rep.provenance["caps"] = json::object();
    finish(rep, timer, 1);
    return rep;
}

Report run_fp(const GenSeq& s) {
    Timer timer;
    Report rep;
    rep.subcommand = "fp";
    rep.params["seq"] = seq_json(s.xs);
    rep.result["values"] = bigset_json(finite_products(s));
    rep.status = Report::Status::found;
    rep.provenance["search_order"] = "subset enumeration";
    rep.provenance["caps"] = json::object();
    finish(rep, timer, 1);
    return rep;
}

Report run_fep(const GenSeq& s, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "fep";
    rep.params["seq"] = seq_json(s.xs);
    rep.provenance["search_order"] = "increasing index chains";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    rep.result["values"] = bigset_json(exponent_towers(s, opt.caps.bit_cap));
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

namespace {

Report fep_search_report(const FepSearchResult& res, json params, const RuleColoring& coloring,
                         const RunOptions& opt, const Timer& timer) {
    Report rep;
    rep.subcommand = "fep";
    rep.params = std::move(params);
    rep.provenance["search_order"] = "candidate sequences lexicographic";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    json skipped = json::array();
    for (const auto& s : res.skipped) skipped.push_back(s);
    rep.result["skipped"] = std::move(skipped);
    if (res.sequence) {
        Witness w;
        w.kind = "tower";
        w.window = 0;
        w.colors = coloring.colors();
        w.color = res.color;
        auto fep = exponent_towers(*res.sequence, opt.caps.bit_cap);
        w.elements.assign(fep.begin(), fep.end());
        json sj = json::array();
        for (auto v : res.sequence->xs) sj.push_back(BigInt(v).str());
        w.params["seq"] = std::move(sj);
        w.provenance["search_order"] = "candidate sequences lexicographic";
        w.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
        rep.witnesses.push_back(std::move(w));
        rep.result["sequence"] = seq_json(res.sequence->xs);
        rep.result["color"] = res.color;
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, 1);
    return rep;
}

}  // namespace

Report run_fep_search_range(std::int64_t lo, std::int64_t hi, int set_size,
                            const RuleColoring& coloring, const RunOptions& opt) {
    Timer timer;
    json params{{"mode", "search"},          {"range_lo", lo},
                {"range_hi", hi},            {"set_size", set_size},
                {"rule", coloring.text()},   {"colors", coloring.colors()}};
    auto res = fep_monochrome_search(lo, hi, set_size, coloring, opt.caps.bit_cap);
    return fep_search_report(res, std::move(params), coloring, opt, timer);
}

Report run_fep_search_lists(const std::vector<std::vector<std::int64_t>>& candidates,
                            const RuleColoring& coloring, const RunOptions& opt) {
    Timer timer;
    json lists = json::array();
    for (const auto& l : candidates) lists.push_back(seq_json(l));
    json params{{"mode", "search"},
                {"candidates", std::move(lists)},
                {"rule", coloring.text()},
                {"colors", coloring.colors()}};
    auto res = fep_monochrome_search(candidates, coloring, opt.caps.bit_cap);
    return fep_search_report(res, std::move(params), coloring, opt, timer);
}

Report run_sumsub_check(const GenSeq& y, const GenSeq& x) {
    Timer timer;
    Report rep;
    rep.subcommand = "sumsub-check";
    rep.params["y"] = seq_json(y.xs);
    rep.params["x"] = seq_json(x.xs);
    rep.provenance["search_order"] = "blocks lexicographic by content";
    rep.provenance["caps"] = json::object();
    auto blocks = find_sum_subsystem(y, x);
    if (blocks) {
        json bj = json::array();
        for (const auto& b : *blocks) bj.push_back(b);
        rep.result["blocks"] = std::move(bj);
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, 1);
    return rep;
}

Report run_find_config(const Coloring& c, const PolyFamily& F, bool anchor,
                       const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "find-config";
    rep.params["window"] = c.window_end();
    rep.params["colors"] = c.colors();
    rep.params["family"] = family_json(F);
    rep.params["anchor"] = anchor;
    rep.provenance["search_order"] = "(a,d) lexicographic";
    rep.provenance["caps"] = caps_json(opt.caps);
    auto w = find_poly_config(c, F, anchor, opt.workers);
    if (w) {
        rep.witnesses.push_back(std::move(*w));
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, opt.workers);
    return rep;
}

namespace {

Report threshold_report(const char* subcommand, json params, const ThresholdResult& res,
                        const Timer& timer, const RunOptions& opt) {
    Report rep;
    rep.subcommand = subcommand;
    rep.params = std::move(params);
    rep.provenance["search_order"] =
        "windows ascending; canonical colorings lexicographic (color of 1 fixed, first-use renaming)";
    rep.provenance["caps"] = caps_json(opt.caps);
    rep.result["searched_to"] = res.searched_to;
    if (res.status == ThresholdResult::Status::found) {
        rep.status = Report::Status::found;
        rep.result["n"] = res.n;
        rep.result["avoiding"] = print_coloring(res.avoiding);
    } else {
        rep.status = res.status == ThresholdResult::Status::capped ? Report::Status::capped
                                                                   : Report::Status::not_found;
        rep.result["avoiding"] = print_coloring(res.avoiding);
    }
    finish(rep, timer, opt.workers, res.nodes);
    return rep;
}

}  // namespace

Report run_threshold_vdw(int k, int r, int n_max, const RunOptions& opt) {
    Timer timer;
    if (k < 2) throw std::invalid_argument("vdw threshold: k must be >= 2");
    PolyFamily F;
    for (int i = 1; i < k; ++i) {
        std::vector<BigInt> coeffs{0, i};
        F.emplace_back(std::move(coeffs));
    }
    auto res = pvdw_threshold(F, r, n_max, /*anchor=*/true, opt.caps, opt.workers);
    json params{{"kind", "vdw"}, {"k", k}, {"r", r}, {"max", n_max}};
    return threshold_report("threshold", std::move(params), res, timer, opt);
}

Report run_threshold_poly(const PolyFamily& F, int r, int n_max, bool anchor,
                          const RunOptions& opt) {
    Timer timer;
    auto res = pvdw_threshold(F, r, n_max, anchor, opt.caps, opt.workers);
    json params{{"kind", "poly"},
                {"family", family_json(F)},
                {"r", r},
                {"max", n_max},
                {"anchor", anchor}};
    return threshold_report("threshold", std::move(params), res, timer, opt);
}

Report run_schur_threshold(int r, bool multiplicative, int n_max, bool allow_equal,
                           const RunOptions& opt) {
    Timer timer;
    auto res = schur_threshold(r, multiplicative, n_max, allow_equal, opt.caps, opt.workers);
    json params{{"mode", "threshold"},
                {"op", multiplicative ? "multiplicative" : "additive"},
                {"r", r},
                {"max", n_max},
                {"allow_equal", allow_equal}};
    return threshold_report("schur", std::move(params), res, timer, opt);
}

Report run_schur_find(const Coloring& c, bool multiplicative, bool allow_equal) {
    Timer timer;
    Report rep;
    rep.subcommand = "schur";
    rep.params["mode"] = "find";
    rep.params["window"] = c.window_end();
    rep.params["colors"] = c.colors();
    rep.params["op"] = multiplicative ? "multiplicative" : "additive";
    rep.params["allow_equal"] = allow_equal;
    rep.provenance["search_order"] = "(x,y) lexicographic";
    rep.provenance["caps"] = json::object();
    auto w = find_schur(c, multiplicative, allow_equal);
    if (w) {
        rep.witnesses.push_back(std::move(*w));
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, 1);
    return rep;
}

Report run_exp_search(const RuleColoring& c, std::int64_t x_max, std::int64_t y_max,
                      const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "exp-search";
    rep.params["rule"] = c.text();
    rep.params["colors"] = c.colors();
    rep.params["x_max"] = x_max;
    rep.params["y_max"] = y_max;
    rep.provenance["search_order"] = "(x,y) lexicographic";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    auto res = find_exp(c, x_max, y_max, opt.caps.bit_cap);
    json skipped = json::array();
    for (auto [x, y] : res.skipped) skipped.push_back(json{{"x", x}, {"y", y}});
    rep.result["skipped"] = std::move(skipped);
    if (res.witness) {
        rep.witnesses.push_back(std::move(*res.witness));
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, 1);
    return rep;
}

Report run_hj_search(const HjInstance& inst, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "hj-search";
    rep.params["t"] = inst.t;
    rep.params["N"] = inst.N;
    rep.params["colors"] = inst.coloring.colors();
    rep.provenance["search_order"] = "variable words lexicographic, v < 1 < ... < t";
    rep.provenance["caps"] = caps_json(opt.caps);
    auto w = hj_search(inst, opt.workers);
    if (w) {
        rep.result["word"] = w->to_string();
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, opt.workers);
    return rep;
}

Report run_hj_number(int r, int t, int n_max, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "hj-number";
    rep.params["r"] = r;
    rep.params["t"] = t;
    rep.params["max"] = n_max;
    rep.provenance["search_order"] =
        "N ascending; canonical colorings lexicographic (color of first point fixed)";
    rep.provenance["caps"] = caps_json(opt.caps);
    auto res = hj_number(r, t, n_max, opt.caps, opt.workers);
    switch (res.status) {
        case HjNumberResult::Status::found:
            rep.status = Report::Status::found;
            rep.result["N"] = res.N;
            break;
        case HjNumberResult::Status::not_found:
            rep.status = Report::Status::not_found;
            rep.result["searched_to"] = n_max;
            break;
        case HjNumberResult::Status::capped:
            rep.status = Report::Status::capped;
            break;
    }
    finish(rep, timer, opt.workers, res.nodes);
    return rep;
}

Report run_phj_search(const PhjInstance& inst, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "phj-search";
    rep.params["q"] = inst.shape.q;
    rep.params["N"] = inst.shape.N;
    rep.params["d"] = inst.shape.d;
    rep.params["colors"] = inst.coloring.colors();
    rep.provenance["search_order"] = "gamma by size then lex, then points lexicographic";
    rep.provenance["caps"] = caps_json(opt.caps);
    auto w = phj_search(inst, opt.caps, opt.workers);
    if (w) {
        json coords = json::array();
        for (auto v : w->a.coords) coords.push_back(int(v));
        rep.result["a"] = std::move(coords);
        rep.result["gamma"] = w->gamma;
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, opt.workers);
    return rep;
}

Report run_phj_embed(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                     const GenSeq& xs, const std::vector<BigInt>& coeffs) {
    Timer timer;
    Report rep;
    rep.subcommand = "phj-embed";
    rep.params["q"] = shape.q;
    rep.params["N"] = shape.N;
    rep.params["d"] = shape.d;
    json coords = json::array();
    for (auto v : a.coords) coords.push_back(int(v));
    rep.params["a"] = std::move(coords);
    rep.params["gamma"] = gamma;
    rep.params["xs"] = seq_json(xs.xs);
    json cj = json::array();
    for (const auto& c : coeffs) cj.push_back(c.str());
    rep.params["coeffs"] = std::move(cj);
    rep.provenance["search_order"] = "direct evaluation";
    rep.provenance["caps"] = json::object();

    MonomialTable table(shape, xs);
    auto pattern = embedded_pattern(shape, a, gamma, xs, coeffs);
    BigInt s = 0;
    for (int i : gamma) s += xs.xs[std::size_t(i) - 1];
    rep.result["embedding"] = embed_point(shape, a, table).str();
    rep.result["base"] = pattern.base.str();
    rep.result["value"] = pattern.value.str();
    rep.result["subset_sum"] = s.str();
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

Report run_config_R(const WindowSet& A, const PolyFamily& F, const LargenessParams& params) {
    Timer timer;
    Report rep;
    rep.subcommand = "config-R";
    rep.params["window"] = A.window_end();
    rep.params["family"] = family_json(F);
    rep.params["g"] = params.g;
    rep.params["L"] = params.L;
    rep.provenance["search_order"] = "n ascending";
    rep.provenance["caps"] = json::object();
    WindowSet R = config_set_R(A, F, params);
    rep.result["R"] = R.elements();
    rep.result["set"] = print_window_set(R);
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

Report run_ipstar_check(const WindowSet& A, int r, bool distinct, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "ipstar-check";
    rep.params["window"] = A.window_end();
    rep.params["r"] = r;
    rep.params["distinct"] = distinct;
    rep.provenance["search_order"] = "generator tuples lexicographic";
    rep.provenance["caps"] = json::object();
    auto res = check_ip_r_star(A, r, distinct, opt.workers);
    switch (res.status) {
        case IprStarResult::Status::holds:
            rep.status = Report::Status::found;
            rep.result["holds"] = true;
            break;
        case IprStarResult::Status::counterexample:
            rep.status = Report::Status::not_found;
            rep.result["holds"] = false;
            rep.counterexamples.push_back(seq_json(res.counterexample));
            break;
        case IprStarResult::Status::vacuous:
            rep.status = Report::Status::exhausted;
            rep.result["vacuous"] = true;
            break;
    }
    finish(rep, timer, opt.workers);
    return rep;
}

Report run_ipr_verify(const WindowSet& A, const PolyFamily& F, const LargenessParams& params,
                      int r_max, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "ipr-verify";
    rep.params["window"] = A.window_end();
    rep.params["family"] = family_json(F);
    rep.params["g"] = params.g;
    rep.params["L"] = params.L;
    rep.params["r_max"] = r_max;
    rep.provenance["search_order"] = "r ascending; generator tuples lexicographic";
    rep.provenance["caps"] = json::object();
    auto res = verify_ipr_pvdw(A, F, params, r_max, opt.workers);
    rep.result["R"] = res.R.elements();
    json attempts = json::array();
    for (const auto& at : res.attempts) {
        json a{{"r", at.r}};
        switch (at.result.status) {
            case IprStarResult::Status::holds:
                a["holds"] = true;
                break;
            case IprStarResult::Status::counterexample:
                a["holds"] = false;
                a["counterexample"] = seq_json(at.result.counterexample);
                rep.counterexamples.push_back(seq_json(at.result.counterexample));
                break;
            case IprStarResult::Status::vacuous:
                a["vacuous"] = true;
                break;
        }
        attempts.push_back(std::move(a));
    }
    rep.result["attempts"] = std::move(attempts);
    if (res.least_r) {
        rep.result["least_r"] = *res.least_r;
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, opt.workers);
    return rep;
}

Report run_sumsub_search(const WindowSet& A, const WindowSet* B, const GenSeq& x,
                         const PolyFamily& F, int N_target, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "sumsub-search";
    rep.params["window"] = A.window_end();
    rep.params["x"] = seq_json(x.xs);
    rep.params["family"] = family_json(F);
    rep.params["N"] = N_target;
    rep.params["product_set"] = B != nullptr;
    rep.provenance["search_order"] = "blocks lexicographic by content";
    rep.provenance["caps"] = caps_json(opt.caps);
    auto res = sumsub_pattern_search(A, B, x, F, N_target, opt.caps);
    if (res) {
        rep.result["y"] = seq_json(res->y);
        json bj = json::array();
        for (const auto& b : res->blocks) bj.push_back(b);
        rep.result["blocks"] = std::move(bj);
        json aj = json::array();
        for (const auto& a : res->anchors) aj.push_back(a.str());
        rep.result["anchors"] = std::move(aj);
        json sets = json::array();
        for (const auto& s : res->anchor_sets) sets.push_back(s.elements());
        rep.result["anchor_sets"] = std::move(sets);
        rep.witnesses.push_back(res->witness);
        rep.status = Report::Status::found;
    } else {
        rep.status = Report::Status::not_found;
    }
    finish(rep, timer, 1);
    return rep;
}

Report run_tower_star(std::int64_t n, const BigInt& a, const BigInt& b, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "tower";
    rep.params["mode"] = "star";
    rep.params["n"] = n;
    rep.params["a"] = a.str();
    rep.params["b"] = b.str();
    rep.provenance["search_order"] = "direct evaluation";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    rep.result["value"] = star(n, a, b, opt.caps.bit_cap).str();
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

Report run_tower_f(int k, std::int64_t x, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "tower";
    rep.params["mode"] = "f";
    rep.params["k"] = k;
    rep.params["x"] = x;
    rep.provenance["search_order"] = "direct evaluation";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    auto res = f_seq(k, x, opt.caps.bit_cap);
    rep.result["expr"] = res.expr.serialize();
    if (res.value) {
        rep.result["value"] = res.value->str();
        rep.result["over_cap"] = false;
    } else {
        rep.result["value"] = nullptr;
        rep.result["over_cap"] = true;
    }
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

Report run_tower_eval(const std::string& expr, const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "tower";
    rep.params["mode"] = "eval";
    rep.params["expr"] = expr;
    rep.provenance["search_order"] = "direct evaluation";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    TowerExpr e = TowerExpr::parse(expr);
    rep.result["expr"] = e.serialize();
    auto value = e.eval(opt.caps.bit_cap);
    if (value) {
        rep.result["value"] = value->str();
        rep.result["over_cap"] = false;
    } else {
        rep.result["value"] = nullptr;
        rep.result["over_cap"] = true;
    }
    rep.status = Report::Status::found;
    finish(rep, timer, 1);
    return rep;
}

Report run_pf_pattern(std::int64_t n, const GenSeq& xs,
                      const std::vector<PolyFamily>& poly_choices, int k_max,
                      const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "pf-pattern";
    rep.params["n"] = n;
    rep.params["xs"] = seq_json(xs.xs);
    json fams = json::array();
    for (const auto& f : poly_choices) fams.push_back(family_json(f));
    rep.params["families"] = std::move(fams);
    rep.params["k_max"] = k_max;
    rep.provenance["search_order"] = "k ascending, polynomial choices lexicographic";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    auto res = pf_pattern(n, xs, poly_choices, k_max, opt.caps.bit_cap);
    rep.result["values"] = bigset_json(res.values);
    json skipped = json::array();
    for (const auto& s : res.skipped) skipped.push_back(s);
    rep.result["skipped"] = std::move(skipped);
    rep.result["complete"] = res.complete;
    rep.status = res.complete ? Report::Status::found : Report::Status::capped;
    finish(rep, timer, 1);
    return rep;
}

Report run_lambda_check(const GenSeq& a_seq, std::int64_t N,
                        const std::vector<std::int64_t>& f_bounds, const RuleColoring& coloring,
                        const RunOptions& opt) {
    Timer timer;
    Report rep;
    rep.subcommand = "pf-pattern";
    rep.params["mode"] = "lambda";
    rep.params["a"] = seq_json(a_seq.xs);
    rep.params["N"] = N;
    rep.params["f_bounds"] = seq_json(f_bounds);
    rep.params["rule"] = coloring.text();
    rep.provenance["search_order"] = "(k, lambda) lexicographic";
    rep.provenance["caps"] = json{{"bit_cap", opt.caps.bit_cap}};
    auto res = check_lambda_pattern(a_seq, N, f_bounds, coloring, opt.caps.bit_cap);
    rep.result["checked"] = res.checked;
    json skipped = json::array();
    for (const auto& s : res.skipped) skipped.push_back(s);
    rep.result["skipped"] = std::move(skipped);
    if (res.failing) {
        rep.result["monochromatic"] = false;
        rep.result["failing"] = res.failing->str();
        rep.status = Report::Status::not_found;
    } else {
        rep.result["monochromatic"] = true;
        rep.status = Report::Status::found;
    }
    finish(rep, timer, 1);
    return rep;
}

Report run_verify_witness(const Witness& w, const ValidationContext& ctx) {
    Timer timer;
    Report rep;
    rep.subcommand = "verify-witness";
    rep.params["kind"] = w.kind;
    rep.provenance["search_order"] = "recomputation";
    rep.provenance["caps"] = json{{"bit_cap", ctx.bit_cap}};
    auto res = validate_witness(w, ctx);
    rep.result["valid"] = res.ok;
    if (!res.ok) rep.result["diagnostic"] = res.diagnostic;
    rep.status = res.ok ? Report::Status::found : Report::Status::not_found;
    finish(rep, timer, 1);
    return rep;
}

}  // namespace ramsey
