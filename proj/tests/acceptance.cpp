// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Everything here is pinned — thresholds, tolerances
// and expected values are compile-time constants, recomputed against
// independent oracles where the criterion demands it.

#include "ramsey/reference.hpp"
#include "ramsey/runner.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

using namespace ramsey;
using json = nlohmann::ordered_json;

namespace {

const std::string kBin = RAMSEY_CLI_BIN;

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// witnesses accumulated across criteria, re-validated in criterion 9
struct EmittedWitness {
    Witness witness;
    std::string coloring_text;  // dense coloring file content, or empty
    std::string rule_text;      // rule expression, or empty
    std::string set_text;       // window set (sumsub), or empty
    std::string set_b_text;
};
std::vector<EmittedWitness> g_witnesses;

int cli_exit(const std::string& args) {
    std::string cmd = kBin + " " + args + " >/dev/null 2>/dev/null";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

// ---------------------------------------------------------------- 1, 2 --

Outcome criterion_vdw() {
    Outcome out;
    double t0 = now_s();
    auto res = pvdw_threshold(parse_family("d;2d"), 2, 20);
    double elapsed = now_s() - t0;
    out.expect(res.status == ThresholdResult::Status::found, "threshold not found");
    out.expect(res.n == 9, "expected 9, got " + std::to_string(res.n));
    out.expect(res.avoiding.window_end() == 8, "avoiding coloring must cover [1..8]");
    // the certificate is validated by both the engine and the oracle
    out.expect(!find_poly_config(res.avoiding, parse_family("d;2d"), true).has_value(),
               "engine found a config in the avoiding coloring");
    out.expect(!ref::find_poly_config(res.avoiding, parse_family("d;2d"), true).has_value(),
               "oracle found a config in the avoiding coloring");
    out.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s over the 5s budget");
    return out;
}

Outcome criterion_schur() {
    Outcome out;
    double t0 = now_s();
    auto res = schur_threshold(2, false, 10);
    double elapsed = now_s() - t0;
    out.expect(res.status == ThresholdResult::Status::found, "threshold not found");
    out.expect(res.n == 5, "expected 5, got " + std::to_string(res.n));
    out.expect(res.avoiding.window_end() == 4, "avoiding coloring must cover [1..4]");
    out.expect(!find_schur(res.avoiding, false, true).has_value(),
               "avoiding coloring admits a Schur triple");
    for (const auto& pat : schur_triples(4, false, true)) {
        bool mono = true;
        for (int e : pat) mono = mono && res.avoiding.color_of(e) == res.avoiding.color_of(pat[0]);
        out.expect(!mono, "oracle found a monochromatic triple in the certificate");
    }
    out.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + "s over the 1s budget");
    return out;
}

// ------------------------------------------------------------------- 3 --

Outcome criterion_hj() {
    Outcome out;
    double t0 = now_s();
    auto res = hj_number(2, 2, 4);
    double elapsed = now_s() - t0;
    out.expect(res.status == HjNumberResult::Status::found, "HJ number not found");
    out.expect(res.N == 2, "expected 2, got " + std::to_string(res.N));
    // exhaustive cross-check at N = 1 and N = 2 with the serial reference
    PatternSystem n1{2, hj_lines(2, 1)};
    out.expect(ref::find_avoiding_coloring(n1, 2).status == AvoidResult::Status::avoidable,
               "N=1 should admit an avoiding coloring");
    PatternSystem n2{4, hj_lines(2, 2)};
    out.expect(ref::find_avoiding_coloring(n2, 2).status == AvoidResult::Status::unavoidable,
               "N=2 should force a monochromatic line");
    out.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + "s over the 1s budget");
    return out;
}

// ------------------------------------------------------------------- 4 --

// Exhaustive sweep of gamma_embed(phj_oplus(a, gamma, c)) == base +
// sum_j c_j (x_gamma)^j. All (a, gamma, c) for every (N, d, q); the
// generator vectors run over all of [1..4]^N whenever the combo stays
// under ten million cases, and over a fixed 8-vector panel on the largest
// combos.
struct IdentitySweep {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
};

IdentitySweep embedding_identity_sweep(int n_max, int d_max, int q_max, int workers) {
    IdentitySweep sweep;
    const std::vector<std::vector<std::int64_t>> panel{
        {1, 1, 1}, {4, 4, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 4}, {3, 1, 4}, {4, 2, 1}, {2, 4, 3}};

    for (int N = 1; N <= n_max; ++N) {
        for (int d = 1; d <= d_max; ++d) {
            for (int q = 1; q <= q_max; ++q) {
                PhjShape shape(q, N, d);
                const std::uint64_t points = shape.point_count(std::uint64_t(1) << 24);
                auto gammas = all_varsets(N);
                std::uint64_t cvecs = 1;
                for (int j = 0; j < d; ++j) cvecs *= std::uint64_t(q);

                std::vector<std::vector<std::int64_t>> xs_list;
                std::uint64_t xs_count = 1;
                for (int i = 0; i < N; ++i) xs_count *= 4;
                if (points * gammas.size() * cvecs * xs_count <= 10'000'000) {
                    std::vector<std::int64_t> xs(std::size_t(N), 1);
                    while (true) {
                        xs_list.push_back(xs);
                        int i = N - 1;
                        while (i >= 0 && xs[std::size_t(i)] == 4) xs[std::size_t(i--)] = 1;
                        if (i < 0) break;
                        ++xs[std::size_t(i)];
                    }
                } else {
                    for (const auto& p : panel)
                        xs_list.emplace_back(p.begin(), p.begin() + N);
                }

                for (const auto& xs_raw : xs_list) {
                    GenSeq xs(xs_raw);
                    MonomialTable table(shape, xs);
                    for (const auto& gamma : gammas) {
                        GammaIndex gi(shape, gamma);
                        BigInt s = 0;
                        for (int i : gamma) s += xs_raw[std::size_t(i) - 1];
                        std::vector<BigInt> spow(std::size_t(d) + 1, 1);
                        for (int j = 1; j <= d; ++j) spow[std::size_t(j)] = spow[std::size_t(j) - 1] * s;

                        std::atomic<std::uint64_t> fails{0}, cases{0};
#pragma omp parallel num_threads(workers)
                        {
                            std::uint64_t my_fails = 0, my_cases = 0;
                            PhjPoint b;
                            std::vector<int> c(std::size_t(d), 1);
#pragma omp for schedule(static)
                            for (std::int64_t rank = 0; rank < std::int64_t(points); ++rank) {
                                PhjPoint a = phj_point_from_rank(shape, std::uint64_t(rank));
                                BigInt base = embed_point_masked(shape, a, gi, table);
                                std::fill(c.begin(), c.end(), 1);
                                while (true) {
                                    phj_oplus_into(shape, a, gi, c, b);
                                    BigInt lhs = embed_point(shape, b, table);
                                    BigInt rhs = base;
                                    for (int j = 1; j <= d; ++j)
                                        rhs += c[std::size_t(j) - 1] * spow[std::size_t(j)];
                                    ++my_cases;
                                    if (lhs != rhs) ++my_fails;
                                    int j = d - 1;
                                    while (j >= 0 && c[std::size_t(j)] == q) c[std::size_t(j--)] = 1;
                                    if (j < 0) break;
                                    ++c[std::size_t(j)];
                                }
                            }
                            fails += my_fails;
                            cases += my_cases;
                        }
                        sweep.failures += fails.load();
                        sweep.cases += cases.load();
                    }
                }
            }
        }
    }
    return sweep;
}

Outcome criterion_embedding() {
    Outcome out;
    double t0 = now_s();
    IdentitySweep sweep = embedding_identity_sweep(3, 2, 3, omp_get_max_threads());
    double elapsed = now_s() - t0;
    out.expect(sweep.failures == 0, std::to_string(sweep.failures) + " identity failures");
    out.expect(sweep.cases >= 100'000,
               "only " + std::to_string(sweep.cases) + " cases enumerated");
    out.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s over the 60s budget");
    out.detail = std::to_string(sweep.cases) + " cases";
    return out;
}

// ------------------------------------------------------------------- 5 --

struct RandomInstance {
    Coloring coloring;
    PolyFamily family;
    bool anchor;
};

RandomInstance random_instance(std::mt19937_64& rng) {
    int n = 1 + int(rng() % 12);
    int r = 1 + int(rng() % 2);
    std::vector<int> assign(std::size_t(n), 0);
    for (auto& c : assign) c = int(rng() % std::uint64_t(r));
    static const std::vector<std::string> pool{"d", "2d", "d^2"};
    PolyFamily F;
    std::uint64_t mask = 1 + rng() % 7;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) F.push_back(parse_poly(pool[i]));
    return {Coloring(n, r, assign), F, rng() % 2 == 0};
}

Outcome criterion_oracle_equivalence() {
    Outcome out;
    std::mt19937_64 rng(2024);
    int disagreements = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        RandomInstance inst = random_instance(rng);
        auto fast = find_poly_config(inst.coloring, inst.family, inst.anchor);
        auto slow = ref::find_poly_config(inst.coloring, inst.family, inst.anchor);
        if (fast.has_value() != slow.has_value()) {
            ++disagreements;
            continue;
        }
        if (fast) {
            if (fast->params["a"].get<std::string>() != std::to_string(slow->first) ||
                fast->params["d"].get<std::string>() != std::to_string(slow->second))
                ++disagreements;
            else if (iter % 25 == 0)
                g_witnesses.push_back(
                    {*fast, print_coloring(inst.coloring), "", "", ""});
        }
    }
    out.expect(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
    return out;
}

// ------------------------------------------------------------------- 6 --

Outcome criterion_window_verifier() {
    Outcome out;
    WindowSet A = WindowSet::full(12);
    PolyFamily F = parse_family("d");
    WindowSet R = config_set_R(A, F, {1, 4});
    out.expect(R.elements() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8},
               "R != {1..8}: got " + print_window_set(R));
    auto verify = verify_ipr_pvdw(A, F, {1, 4}, 3);
    out.expect(!verify.attempts.empty() &&
                   verify.attempts[0].result.status == IprStarResult::Status::counterexample,
               "r=1 should fail");
    out.expect(!verify.attempts.empty() &&
                   verify.attempts[0].result.counterexample == std::vector<std::int64_t>{9},
               "r=1 counterexample should be <9>");
    out.expect(verify.least_r.has_value() && *verify.least_r == 2,
               "least r should be 2 (frozen regression)");
    return out;
}

// ------------------------------------------------------------------- 7 --

Outcome criterion_fep() {
    Outcome out;
    std::set<BigInt> two_three{2, 3, 9};
    out.expect(exponent_towers(GenSeq({2, 3})) == two_three, "FEP(<2,3>) != {2,3,9}");
    std::set<BigInt> three{2, 3, 4, 9, 16, 64, 262144};
    out.expect(exponent_towers(GenSeq({2, 3, 4})) == three,
               "FEP(<2,3,4>) != {2,3,4,9,16,64,262144}");
    // association regression: 4^(3^2) = 262144 comes from the chain (1,2,3),
    // largest index at the base
    out.expect(exponent_towers(GenSeq({2, 3, 4})).count(BigInt(262144)) == 1,
               "largest-index-at-base association broken");
    return out;
}

// ------------------------------------------------------------------- 8 --

Outcome criterion_f_seq() {
    Outcome out;
    auto f2 = f_seq(2, 3);
    out.expect(f2.value && *f2.value == 8, "f_2(3) != 8");
    auto f3 = f_seq(3, 3);
    out.expect(f3.value && *f3.value == 16777216, "f_3(3) != 16777216");
    const std::uint64_t cap = std::uint64_t(1) << 26;
    for (int x = 1; x <= 3; ++x)
        for (int k = 2; k <= 4; ++k) {
            auto res = f_seq(k, x, cap);
            auto naive = res.expr.eval(cap);
            if (!res.value || !naive || *res.value != *naive)
                out.fail("normalized != naive at k=" + std::to_string(k) +
                         ", x=" + std::to_string(x));
        }
    return out;
}

// ------------------------------------------------------------------- 9 --

Outcome criterion_witness_roundtrip() {
    Outcome out;
    // add variety beyond criterion 5's poly-config certificates
    {
        Coloring c = Coloring::constant(6, 2);
        auto w = find_schur(c, false);
        if (w) g_witnesses.push_back({*w, print_coloring(c), "", "", ""});
        auto wm = find_schur(c, true);
        if (wm) g_witnesses.push_back({*wm, print_coloring(c), "", "", ""});
    }
    {
        auto rule = parse_rule_coloring("mod:2:0,1");
        auto we = find_exp(rule, 6, 6);
        if (we.witness) g_witnesses.push_back({*we.witness, "", rule.text(), "", ""});
        auto res = fep_monochrome_search(2, 6, 2, rule);
        if (res.sequence) {
            Witness w;
            w.kind = "tower";
            w.colors = rule.colors();
            w.color = res.color;
            auto fep = exponent_towers(*res.sequence);
            w.elements.assign(fep.begin(), fep.end());
            json sj = json::array();
            for (auto v : res.sequence->xs) sj.push_back(BigInt(v).str());
            w.params["seq"] = sj;
            g_witnesses.push_back({w, "", rule.text(), "", ""});
        }
    }
    {
        WindowSet A = WindowSet::full(40);
        auto res = sumsub_pattern_search(A, nullptr, GenSeq({2, 3, 5}), parse_family("d"), 2);
        if (res) g_witnesses.push_back({res->witness, "", "", print_window_set(A), ""});
    }

    out.expect(g_witnesses.size() >= 30, "not enough witnesses collected: " +
                                             std::to_string(g_witnesses.size()));
    int lib_failures = 0, cli_failures = 0;
    int idx = 0;
    for (const auto& ew : g_witnesses) {
        // library-level validation
        ValidationContext ctx;
        std::optional<Coloring> dense;
        std::optional<RuleColoring> rule;
        std::optional<WindowSet> A, B;
        if (!ew.coloring_text.empty()) {
            auto any = parse_coloring_text(ew.coloring_text);
            dense = std::get<Coloring>(any);
            ctx.coloring = &*dense;
        }
        if (!ew.rule_text.empty()) {
            rule = parse_rule_coloring(ew.rule_text);
            ctx.rule = &*rule;
        }
        if (!ew.set_text.empty()) {
            A = parse_window_set_text(ew.set_text);
            ctx.set_a = &*A;
        }
        if (!ew.set_b_text.empty()) {
            B = parse_window_set_text(ew.set_b_text);
            ctx.set_b = &*B;
        }
        if (!validate_witness(ew.witness, ctx).ok) ++lib_failures;

        // CLI-level validation on the serialized form
        std::string wpath = "/tmp/ramsey_acc_w" + std::to_string(idx) + ".json";
        write_file(wpath, ew.witness.to_json().dump(2) + "\n");
        std::string args = "verify-witness --witness " + wpath;
        if (!ew.coloring_text.empty()) {
            std::string cpath = "/tmp/ramsey_acc_c" + std::to_string(idx) + ".txt";
            write_file(cpath, ew.coloring_text);
            args += " --coloring " + cpath;
        }
        if (!ew.rule_text.empty()) args += " --rule \"" + ew.rule_text + "\"";
        if (!ew.set_text.empty()) {
            std::string spath = "/tmp/ramsey_acc_s" + std::to_string(idx) + ".txt";
            write_file(spath, ew.set_text);
            args += " --set " + spath;
        }
        if (!ew.set_b_text.empty()) {
            std::string bpath = "/tmp/ramsey_acc_b" + std::to_string(idx) + ".txt";
            write_file(bpath, ew.set_b_text);
            args += " --product-set " + bpath;
        }
        if (cli_exit(args) != 0) ++cli_failures;
        ++idx;
    }
    out.expect(lib_failures == 0, std::to_string(lib_failures) + " library validation failures");
    out.expect(cli_failures == 0, std::to_string(cli_failures) + " CLI validation failures");
    out.detail = std::to_string(g_witnesses.size()) + " witnesses";
    return out;
}

// ------------------------------------------------------------------ 10 --

Outcome criterion_determinism() {
    Outcome out;
    const std::vector<int> worker_counts{1, 2, 8};

    auto compare = [&](const char* what, const std::function<Report(int)>& make) {
        json base;
        for (std::size_t i = 0; i < worker_counts.size(); ++i) {
            json j = make(worker_counts[i]).to_json(/*include_perf=*/false);
            if (i == 0)
                base = std::move(j);
            else if (j != base)
                out.fail(std::string(what) + ": report differs at workers " +
                         std::to_string(worker_counts[i]));
        }
    };

    compare("vdw threshold", [](int w) {
        RunOptions opt;
        opt.workers = w;
        return run_threshold_vdw(3, 2, 20, opt);
    });
    compare("schur threshold", [](int w) {
        RunOptions opt;
        opt.workers = w;
        return run_schur_threshold(2, false, 10, true, opt);
    });
    compare("hj number", [](int w) {
        RunOptions opt;
        opt.workers = w;
        return run_hj_number(2, 2, 4, opt);
    });
    // criterion 4's sweep on a reduced grid: the counted outcome must not
    // depend on the worker count
    {
        IdentitySweep one = embedding_identity_sweep(2, 2, 3, 1);
        IdentitySweep two = embedding_identity_sweep(2, 2, 3, 2);
        IdentitySweep eight = embedding_identity_sweep(2, 2, 3, 8);
        if (one.cases != two.cases || one.cases != eight.cases || one.failures != two.failures ||
            one.failures != eight.failures)
            out.fail("embedding sweep varies with workers");
    }
    // criterion 5 sample across worker counts
    {
        std::mt19937_64 rng(2024);
        for (int iter = 0; iter < 200; ++iter) {
            RandomInstance inst = random_instance(rng);
            json base;
            for (std::size_t i = 0; i < worker_counts.size(); ++i) {
                RunOptions opt;
                opt.workers = worker_counts[i];
                json j = run_find_config(inst.coloring, inst.family, inst.anchor, opt)
                             .to_json(false);
                if (i == 0)
                    base = std::move(j);
                else if (j != base) {
                    out.fail("find-config report differs at iteration " + std::to_string(iter));
                    break;
                }
            }
        }
    }
    compare("window verifier", [](int w) {
        RunOptions opt;
        opt.workers = w;
        return run_ipr_verify(WindowSet::full(12), parse_family("d"), {1, 4}, 3, opt);
    });
    return out;
}

// ------------------------------------------------------------------ 11 --

Outcome criterion_sumsub_soundness() {
    Outcome out;
    struct Fixture {
        WindowSet A;
        std::optional<WindowSet> B;
        GenSeq x;
        PolyFamily F;
        int N;
    };
    std::vector<Fixture> fixtures;

    for (int n : {20, 30, 40, 50})
        for (const auto& xs : {std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{2, 3}})
            fixtures.push_back({WindowSet::full(n), std::nullopt, GenSeq(xs),
                                parse_family("d"), 2});
    for (int n : {36, 60}) {
        WindowSet A(n);
        for (int i = 3; i <= n; i += 3) A.insert(i);
        fixtures.push_back({A, std::nullopt, GenSeq({3, 6, 12}), parse_family("d"), 2});
        fixtures.push_back({A, std::nullopt, GenSeq({3, 6}), parse_family("d"), 1});
    }
    fixtures.push_back(
        {WindowSet::full(60), std::nullopt, GenSeq({1, 2, 4}), parse_family("d;2d"), 2});
    fixtures.push_back(
        {WindowSet::full(80), std::nullopt, GenSeq({1, 2}), parse_family("d;d^2"), 2});
    fixtures.push_back({WindowSet::full(25), std::nullopt, GenSeq({1, 1, 2}),
                        parse_family("d"), 3});
    {
        WindowSet B(64);
        for (int v : {2, 4, 8, 16, 32, 64}) B.insert(v);
        fixtures.push_back({WindowSet::full(64), B, GenSeq({2, 2, 3}), parse_family("d"), 2});
        fixtures.push_back({WindowSet::full(64), B, GenSeq({2, 4}), parse_family("d"), 2});
    }
    std::mt19937_64 rng(777);
    while (fixtures.size() < 26) {
        int n = 30 + int(rng() % 30);
        WindowSet A(n);
        std::bernoulli_distribution keep(0.85);
        for (int i = 1; i <= n; ++i)
            if (keep(rng)) A.insert(i);
        std::vector<std::int64_t> xs{1 + std::int64_t(rng() % 3), 1 + std::int64_t(rng() % 3)};
        fixtures.push_back({A, std::nullopt, GenSeq(xs), parse_family("d"), 2});
    }

    int found = 0;
    for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
        const auto& fx = fixtures[fi];
        auto res =
            sumsub_pattern_search(fx.A, fx.B ? &*fx.B : nullptr, fx.x, fx.F, fx.N);
        if (!res) continue;
        ++found;
        // (a) ordered disjoint blocks summing to y
        int prev_max = 0;
        for (std::size_t n = 0; n < res->blocks.size(); ++n) {
            const auto& H = res->blocks[n];
            if (H.empty() || H.front() <= prev_max || !std::is_sorted(H.begin(), H.end()))
                out.fail("fixture " + std::to_string(fi) + ": blocks not ordered/disjoint");
            else if (x_alpha(fx.x, H) != res->y[n])
                out.fail("fixture " + std::to_string(fi) + ": block sum mismatch");
            if (!H.empty()) prev_max = H.back();
        }
        // (b) FS(y) inside FS(x)
        auto fy = finite_sums(GenSeq(res->y));
        auto fxs = finite_sums(fx.x);
        for (const auto& v : fy)
            if (!fxs.count(v)) out.fail("fixture " + std::to_string(fi) + ": FS(y) escapes FS(x)");
        // (c) the displayed inclusions, for every N and every reported anchor
        for (std::size_t N = 1; N <= res->y.size(); ++N) {
            GenSeq yn(std::vector<std::int64_t>(res->y.begin(),
                                                res->y.begin() + std::ptrdiff_t(N)));
            std::set<BigInt> vals = finite_sums(yn);
            auto fp = finite_products(yn);
            vals.insert(fp.begin(), fp.end());
            std::vector<BigInt> anchors{res->anchors[N - 1]};
            for (int a : res->anchor_sets[N - 1].elements()) anchors.emplace_back(a);
            for (const auto& a : anchors)
                for (const auto& p : fx.F)
                    for (const auto& v : vals) {
                        BigInt e = a + p.eval(v);
                        if (e < 1 || e > fx.A.window_end() ||
                            !fx.A.contains(e.convert_to<int>()))
                            out.fail("fixture " + std::to_string(fi) + ": inclusion fails");
                    }
        }
        if (fx.B)
            for (const auto& v : finite_products(GenSeq(res->y)))
                if (v > fx.B->window_end() || !fx.B->contains(v.convert_to<int>()))
                    out.fail("fixture " + std::to_string(fi) + ": FP(y) escapes B");
        // and the packaged certificate re-validates
        ValidationContext ctx;
        ctx.set_a = &fx.A;
        if (fx.B) ctx.set_b = &*fx.B;
        auto val = validate_witness(res->witness, ctx);
        if (!val.ok)
            out.fail("fixture " + std::to_string(fi) + ": witness invalid: " + val.diagnostic);
        g_witnesses.push_back({res->witness, "", "", print_window_set(fx.A),
                               fx.B ? print_window_set(*fx.B) : ""});
    }
    out.expect(found >= 20, "only " + std::to_string(found) + " fixtures produced results");
    out.detail = std::to_string(found) + " of " + std::to_string(fixtures.size()) + " fixtures";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    // criterion 9 must run after the witness-producing criteria
    const std::vector<Criterion> criteria{
        {1, "vdW threshold (k=3, r=2) = 9 with validated certificate", criterion_vdw},
        {2, "Schur threshold (additive, r=2) = 5 with validated certificate", criterion_schur},
        {3, "HJ number hj_number(2,2,4) = 2 by exhaustive check", criterion_hj},
        {4, "embedding-line identity, full enumeration", criterion_embedding},
        {5, "find_poly_config oracle equivalence on 1000 random instances",
         criterion_oracle_equivalence},
        {6, "window verifier: R = {1..8}, r=1 fails with <9>", criterion_window_verifier},
        {7, "FEP pinning and tower association", criterion_fep},
        {8, "f_seq recursion, normalized = naive", criterion_f_seq},
        {11, "sum-subsystem soundness on the fixture suite", criterion_sumsub_soundness},
        {9, "witness round-trip through library and CLI", criterion_witness_roundtrip},
        {10, "determinism under 1, 2 and 8 workers", criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        double t0 = now_s();
        Outcome out = c.run();
        double elapsed = now_s() - t0;
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name,
                    elapsed, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
