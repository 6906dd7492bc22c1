#include "ramsey/config_search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <set>

namespace ramsey {

namespace {

using json = nlohmann::ordered_json;

json family_json(const PolyFamily& F) {
    json out = json::array();
    for (const auto& p : F) out.push_back(print_poly(p));
    return out;
}

}  // namespace

std::optional<Witness> find_poly_config(const Coloring& c, const PolyFamily& F, bool anchor,
                                        int workers) {
    if (F.empty()) throw std::invalid_argument("find_poly_config: empty family");
    const int n = c.window_end();
    if (n == 0) return std::nullopt;
    if (workers <= 0) workers = omp_get_max_threads();

    // Values p(d) once per d; d is bounded as in poly_configs.
    BigInt cap_big = 1;
    for (const auto& p : F) {
        auto [deg, coef] = p.deg_coef();
        BigInt bound = coef * deg + n;
        if (bound > cap_big) cap_big = bound;
    }
    const int d_cap = cap_big.convert_to<int>();
    std::vector<std::vector<std::int64_t>> vals(std::size_t(d_cap) + 1);
    std::vector<bool> d_ok(std::size_t(d_cap) + 1, false);
    for (int d = 1; d <= d_cap; ++d) {
        bool ok = true;
        std::vector<std::int64_t> v;
        for (const auto& p : F) {
            BigInt e = p.eval(d);
            if (e <= -n || e >= n) {
                ok = false;
                break;
            }
            v.push_back(e.convert_to<std::int64_t>());
        }
        d_ok[std::size_t(d)] = ok;
        if (ok) vals[std::size_t(d)] = std::move(v);
    }

    std::atomic<int> best_a{n + 1};
    std::vector<int> best_d(std::size_t(n) + 1, 0);

#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (int a = 1; a <= n; ++a) {
        if (a > best_a.load(std::memory_order_relaxed)) continue;
        for (int d = 1; d <= d_cap; ++d) {
            if (!d_ok[std::size_t(d)]) continue;
            int color = anchor ? c.color_of(a) : -1;
            bool mono = true;
            for (auto v : vals[std::size_t(d)]) {
                std::int64_t e = a + v;
                if (e < 1 || e > n) {
                    mono = false;
                    break;
                }
                int col = c.color_of(int(e));
                if (color < 0) color = col;
                if (col != color) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                best_d[std::size_t(a)] = d;
                int cur = best_a.load(std::memory_order_relaxed);
                while (a < cur && !best_a.compare_exchange_weak(cur, a)) {
                }
                break;
            }
        }
    }

    const int a = best_a.load();
    if (a > n) return std::nullopt;
    const int d = best_d[std::size_t(a)];

    Witness w;
    w.kind = "poly-config";
    w.window = n;
    w.colors = c.colors();
    std::set<BigInt> elems;
    if (anchor) elems.insert(a);
    for (const auto& p : F) elems.insert(BigInt(a) + p.eval(d));
    w.elements.assign(elems.begin(), elems.end());
    w.color = c.color_of(w.elements.front().convert_to<int>());
    w.params["a"] = BigInt(a).str();
    w.params["d"] = BigInt(d).str();
    w.params["polys"] = family_json(F);
    w.params["anchor"] = anchor;
    w.provenance["search_order"] = "(a,d) lexicographic";
    w.provenance["caps"] = json::object();
    return w;
}

std::optional<Witness> find_schur(const Coloring& c, bool multiplicative, bool allow_equal) {
    const int n = c.window_end();
    const std::int64_t lo = multiplicative ? 2 : 1;  // 1 only makes degenerate products
    for (std::int64_t x = lo; x <= n; ++x) {
        for (std::int64_t y = allow_equal ? x : x + 1; y <= n; ++y) {
            std::int64_t z = multiplicative ? x * y : x + y;
            if (z > n) break;
            int col = c.color_of(int(x));
            if (c.color_of(int(y)) != col || c.color_of(int(z)) != col) continue;
            Witness w;
            w.kind = multiplicative ? "product-schur" : "schur";
            w.window = n;
            w.colors = c.colors();
            w.color = col;
            std::set<BigInt> elems{BigInt(x), BigInt(y), BigInt(z)};
            w.elements.assign(elems.begin(), elems.end());
            w.params["x"] = BigInt(x).str();
            w.params["y"] = BigInt(y).str();
            w.params["op"] = multiplicative ? "multiplicative" : "additive";
            w.provenance["search_order"] = "(x,y) lexicographic";
            w.provenance["caps"] = json::object();
            return w;
        }
    }
    return std::nullopt;
}

ExpSearchResult find_exp(const RuleColoring& c, std::int64_t x_max, std::int64_t y_max,
                         std::uint64_t bit_cap) {
    ExpSearchResult out;
    for (std::int64_t x = 2; x <= x_max; ++x) {
        for (std::int64_t y = 2; y <= y_max; ++y) {
            if (x == y) continue;
            BigInt power;
            try {
                power = checked_pow(BigInt(x), BigInt(y), bit_cap);
            } catch (const BitCapExceeded&) {
                out.skipped.emplace_back(x, y);
                continue;
            }
            int col = c.color_of(BigInt(x));
            if (c.color_of(BigInt(y)) != col || c.color_of(power) != col) continue;
            Witness w;
            w.kind = "exp";
            w.window = 0;
            w.colors = c.colors();
            w.color = col;
            std::set<BigInt> elems{BigInt(x), BigInt(y), power};
            w.elements.assign(elems.begin(), elems.end());
            w.params["x"] = BigInt(x).str();
            w.params["y"] = BigInt(y).str();
            w.provenance["search_order"] = "(x,y) lexicographic";
            w.provenance["caps"] = json{{"bit_cap", bit_cap}};
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

WindowSet config_set_R(const WindowSet& A, const PolyFamily& F, const LargenessParams& params) {
    if (F.empty()) throw std::invalid_argument("config_set_R: empty family");
    const int W = A.window_end();
    WindowSet R(W);
    for (int n = 1; n <= W; ++n) {
        WindowSet M(W);
        std::vector<BigInt> vals;
        for (const auto& p : F) vals.push_back(p.eval(n));
        for (int m = 1; m <= W; ++m) {
            if (!A.contains(m)) continue;
            bool ok = true;
            for (const auto& v : vals) {
                BigInt e = m + v;
                if (e < 1 || e > W || !A.contains(e.convert_to<int>())) {
                    ok = false;
                    break;
                }
            }
            if (ok) M.insert(m);
        }
        if (find_pws_interval(M, params).has_value()) R.insert(n);
    }
    return R;
}

IprVerifyResult verify_ipr_pvdw(const WindowSet& A, const PolyFamily& F,
                                const LargenessParams& params, int r_max, int workers) {
    IprVerifyResult out;
    out.R = config_set_R(A, F, params);
    for (int r = 1; r <= r_max; ++r) {
        IprVerifyAttempt attempt;
        attempt.r = r;
        attempt.result = check_ip_r_star(out.R, r, /*distinct=*/true, workers);
        bool holds = attempt.result.status == IprStarResult::Status::holds;
        out.attempts.push_back(std::move(attempt));
        if (holds) {
            out.least_r = r;
            break;
        }
    }
    return out;
}

}  // namespace ramsey
