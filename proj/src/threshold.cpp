#include "ramsey/threshold.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>

namespace ramsey {

namespace {

struct PatternIndex {
    // patterns grouped by their maximum element, so the DFS can check
    // exactly the patterns completed by each assignment
    std::vector<std::vector<const std::vector<int>*>> by_max;

    PatternIndex(const PatternSystem& sys) : by_max(std::size_t(sys.n) + 1) {
        for (const auto& p : sys.patterns) {
            if (p.empty()) continue;
            by_max[std::size_t(p.back())].push_back(&p);
        }
    }
};

struct DfsState {
    const PatternIndex& index;
    int n, r;
    std::uint64_t node_cap;
    std::atomic<std::uint64_t>& nodes;
    std::atomic<bool>& abort;

    // colors[0..depth) assigned; returns true when a full avoiding
    // coloring is reached (left in `colors`)
    bool run(std::vector<int>& colors, int max_used) {
        const int depth = int(colors.size());
        if (depth == n) return true;
        if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_cap) {
            abort.store(true, std::memory_order_relaxed);
            return false;
        }
        if (abort.load(std::memory_order_relaxed)) return false;
        const int elem = depth + 1;
        const int top = std::min(max_used + 1, r - 1);
        for (int c = 0; c <= top; ++c) {
            colors.push_back(c);
            bool mono = false;
            for (const auto* pat : index.by_max[std::size_t(elem)]) {
                mono = true;
                for (int e : *pat) {
                    if (colors[std::size_t(e) - 1] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) break;
            }
            if (!mono && run(colors, std::max(max_used, c))) return true;
            colors.pop_back();
        }
        return false;
    }
};

}  // namespace

AvoidResult find_avoiding_coloring(const PatternSystem& sys, int r, const SearchCaps& caps,
                                   int workers) {
    if (r < 1) throw std::invalid_argument("find_avoiding_coloring: r must be >= 1");
    if (workers <= 0) workers = omp_get_max_threads();

    AvoidResult out;
    if (sys.n == 0) {
        out.status = AvoidResult::Status::avoidable;
        return out;
    }
    for (const auto& p : sys.patterns)
        if (p.size() == 1) {
            // a singleton pattern is monochromatic under every coloring
            out.status = AvoidResult::Status::unavoidable;
            return out;
        }

    PatternIndex index(sys);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};

    // Enumerate canonical prefixes serially (pruned the same way), then
    // finish each subtree in parallel. Prefixes are generated in lex
    // order, so the least successful prefix yields the lex-least coloring.
    int prefix_len = 0;
    std::vector<std::vector<int>> prefixes{{}};
    const std::size_t want = std::size_t(std::max(1, workers)) * 16;
    while (prefix_len < sys.n && prefixes.size() < want && prefixes.size() > 0) {
        std::vector<std::vector<int>> next;
        const int elem = prefix_len + 1;
        for (const auto& pre : prefixes) {
            int max_used = 0;
            for (int c : pre) max_used = std::max(max_used, c);
            const int top = pre.empty() ? 0 : std::min(max_used + 1, r - 1);
            if (nodes.fetch_add(std::uint64_t(top) + 1, std::memory_order_relaxed) >=
                caps.max_nodes) {
                AvoidResult capped;
                capped.status = AvoidResult::Status::capped;
                capped.nodes = nodes.load();
                return capped;
            }
            for (int c = 0; c <= top; ++c) {
                bool mono = false;
                for (const auto* pat : index.by_max[std::size_t(elem)]) {
                    mono = true;
                    for (int e : *pat) {
                        int col = std::size_t(e) - 1 < pre.size() ? pre[std::size_t(e) - 1] : c;
                        if (col != c) {
                            mono = false;
                            break;
                        }
                    }
                    if (mono) break;
                }
                if (mono) continue;
                auto ext = pre;
                ext.push_back(c);
                next.push_back(std::move(ext));
            }
        }
        prefixes = std::move(next);
        ++prefix_len;
    }

    if (prefixes.empty()) {
        out.status = AvoidResult::Status::unavoidable;
        out.nodes = nodes.load();
        return out;
    }

    std::atomic<std::int64_t> best{std::int64_t(prefixes.size())};
    std::vector<std::vector<int>> found(prefixes.size());

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < std::int64_t(prefixes.size()); ++i) {
        if (i > best.load(std::memory_order_relaxed)) continue;
        if (abort.load(std::memory_order_relaxed)) continue;
        std::vector<int> colors = prefixes[std::size_t(i)];
        int max_used = 0;
        for (int c : colors) max_used = std::max(max_used, c);
        DfsState dfs{index, sys.n, r, caps.max_nodes, nodes, abort};
        if (dfs.run(colors, max_used)) {
            found[std::size_t(i)] = colors;
            std::int64_t cur = best.load(std::memory_order_relaxed);
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    }

    out.nodes = nodes.load();
    if (abort.load()) {
        out.status = AvoidResult::Status::capped;
        return out;
    }
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (!found[i].empty() || (sys.n == 0 && i == 0)) {
            out.status = AvoidResult::Status::avoidable;
            out.coloring = found[i];
            return out;
        }
    }
    out.status = AvoidResult::Status::unavoidable;
    return out;
}

namespace {

// d can only contribute while some a keeps every a+p(d) inside the window;
// beyond coef(p)*deg(p) + n the leading term dominates and |p(d)| >= n.
int config_d_cap(int n, const PolyFamily& F) {
    BigInt cap = 1;
    for (const auto& p : F) {
        auto [deg, coef] = p.deg_coef();
        BigInt bound = coef * deg + n;
        if (bound > cap) cap = bound;
    }
    if (cap > 1'000'000) throw ResourceCapExceeded("poly_configs: d range too large");
    return cap.convert_to<int>();
}

}  // namespace

std::vector<std::vector<int>> poly_configs(int n, const PolyFamily& F, bool anchor) {
    if (F.empty()) throw std::invalid_argument("poly_configs: empty family");
    std::set<std::vector<int>> dedup;
    const int d_cap = config_d_cap(n, F);
    for (int d = 1; d <= d_cap; ++d) {
        std::vector<std::int64_t> vals;
        bool in_range = true;
        for (const auto& p : F) {
            BigInt v = p.eval(d);
            if (v <= -n || v >= n) {
                in_range = false;
                break;
            }
            vals.push_back(v.convert_to<std::int64_t>());
        }
        if (!in_range) continue;
        for (int a = 1; a <= n; ++a) {
            std::set<int> elems;
            if (anchor) elems.insert(a);
            bool ok = true;
            for (auto v : vals) {
                std::int64_t e = a + v;
                if (e < 1 || e > n) {
                    ok = false;
                    break;
                }
                elems.insert(int(e));
            }
            if (ok && !elems.empty()) dedup.insert(std::vector<int>(elems.begin(), elems.end()));
        }
    }
    return {dedup.begin(), dedup.end()};
}

std::vector<std::vector<int>> schur_triples(int n, bool multiplicative, bool allow_equal) {
    std::set<std::vector<int>> dedup;
    // multiplicatively, 1 is the identity and only yields degenerate triples
    const std::int64_t lo = multiplicative ? 2 : 1;
    for (std::int64_t x = lo; x <= n; ++x) {
        for (std::int64_t y = allow_equal ? x : x + 1; y <= n; ++y) {
            std::int64_t z = multiplicative ? x * y : x + y;
            if (z > n) break;
            std::set<int> elems{int(x), int(y), int(z)};
            dedup.insert(std::vector<int>(elems.begin(), elems.end()));
        }
    }
    return {dedup.begin(), dedup.end()};
}

namespace {

ThresholdResult threshold_scan(int r, int n_max, const SearchCaps& caps, int workers,
                               const std::function<std::vector<std::vector<int>>(int)>& make_patterns) {
    ThresholdResult out;
    out.avoiding = Coloring(0, r, {});
    for (int n = 1; n <= n_max; ++n) {
        PatternSystem sys{n, make_patterns(n)};
        AvoidResult res = find_avoiding_coloring(sys, r, caps, workers);
        out.nodes += res.nodes;
        if (res.status == AvoidResult::Status::capped) {
            out.status = ThresholdResult::Status::capped;
            out.searched_to = n - 1;
            return out;
        }
        if (res.status == AvoidResult::Status::unavoidable) {
            out.status = ThresholdResult::Status::found;
            out.n = n;
            out.searched_to = n;
            return out;
        }
        out.avoiding = Coloring(n, r, res.coloring);
        out.searched_to = n;
    }
    out.status = ThresholdResult::Status::not_found;
    return out;
}

}  // namespace

ThresholdResult pvdw_threshold(const PolyFamily& F, int r, int n_max, bool anchor,
                               const SearchCaps& caps, int workers) {
    if (F.empty()) throw std::invalid_argument("pvdw_threshold: empty family");
    return threshold_scan(r, n_max, caps, workers,
                          [&](int n) { return poly_configs(n, F, anchor); });
}

ThresholdResult schur_threshold(int r, bool multiplicative, int n_max, bool allow_equal,
                                const SearchCaps& caps, int workers) {
    return threshold_scan(r, n_max, caps, workers,
                          [&](int n) { return schur_triples(n, multiplicative, allow_equal); });
}

}  // namespace ramsey
