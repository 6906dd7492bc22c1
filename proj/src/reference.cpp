#include "ramsey/reference.hpp"

#include <algorithm>
#include <set>

namespace ramsey::ref {

AvoidResult find_avoiding_coloring(const PatternSystem& sys, int r) {
    AvoidResult out;
    std::vector<int> colors(std::size_t(sys.n), 0);

    auto canonical = [&]() {
        int max_used = -1;
        for (int c : colors) {
            if (c > max_used + 1) return false;
            max_used = std::max(max_used, c);
        }
        return true;
    };
    auto avoiding = [&]() {
        for (const auto& pat : sys.patterns) {
            bool mono = true;
            for (int e : pat)
                if (colors[std::size_t(e) - 1] != colors[std::size_t(pat.front()) - 1]) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
        return true;
    };

    while (true) {
        ++out.nodes;
        if (canonical() && avoiding()) {
            out.status = AvoidResult::Status::avoidable;
            out.coloring = colors;
            return out;
        }
        int i = sys.n;
        while (i > 0 && colors[std::size_t(i) - 1] == r - 1) colors[std::size_t(--i)] = 0;
        if (i == 0) break;
        ++colors[std::size_t(i) - 1];
    }
    out.status = AvoidResult::Status::unavoidable;
    return out;
}

std::optional<std::pair<int, int>> find_poly_config(const Coloring& c, const PolyFamily& F,
                                                    bool anchor) {
    const int n = c.window_end();
    // generous d range: values repeat only while |p(d)| < n, and every
    // family member has |p(d)| >= d - coef*deg*d^(deg-1)/... ; scanning to
    // coef*deg + n is always enough
    BigInt cap = 1;
    for (const auto& p : F) {
        auto [deg, coef] = p.deg_coef();
        BigInt bound = coef * deg + n;
        if (bound > cap) cap = bound;
    }
    const int d_cap = cap.convert_to<int>();
    for (int a = 1; a <= n; ++a) {
        for (int d = 1; d <= d_cap; ++d) {
            std::set<BigInt> elems;
            if (anchor) elems.insert(a);
            bool ok = true;
            for (const auto& p : F) {
                BigInt e = BigInt(a) + p.eval(d);
                if (e < 1 || e > n) {
                    ok = false;
                    break;
                }
                elems.insert(e);
            }
            if (!ok || elems.empty()) continue;
            int color = c.color_of(elems.begin()->convert_to<int>());
            bool mono = true;
            for (const auto& e : elems)
                if (c.color_of(e.convert_to<int>()) != color) {
                    mono = false;
                    break;
                }
            if (mono) return std::make_pair(a, d);
        }
    }
    return std::nullopt;
}

IprStarResult check_ip_r_star(const WindowSet& A, int r, bool distinct) {
    const int n = A.window_end();
    const std::int64_t min_total = distinct ? std::int64_t(r) * (r + 1) / 2 : r;
    if (min_total > n) return {IprStarResult::Status::vacuous, {}};

    std::vector<std::int64_t> xs(std::size_t(r), 1);
    std::optional<std::vector<std::int64_t>> best;
    while (true) {
        bool admissible = true;
        if (distinct) {
            auto sorted = xs;
            std::sort(sorted.begin(), sorted.end());
            admissible = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        if (admissible) {
            // full FS by bitmask
            std::int64_t total = 0;
            for (auto v : xs) total += v;
            if (total <= n) {
                bool meets = false;
                for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
                    std::int64_t sum = 0;
                    for (int i = 0; i < r; ++i)
                        if (mask & (1u << i)) sum += xs[std::size_t(i)];
                    if (A.contains(int(sum))) {
                        meets = true;
                        break;
                    }
                }
                if (!meets && (!best || xs < *best)) best = xs;
            }
        }
        int i = r;
        while (i > 0 && xs[std::size_t(i) - 1] == n) xs[std::size_t(--i)] = 1;
        if (i == 0) break;
        ++xs[std::size_t(i) - 1];
    }
    if (best) return {IprStarResult::Status::counterexample, *best};
    return {IprStarResult::Status::holds, {}};
}

std::optional<Word> hj_search(const HjInstance& inst) {
    const int t = inst.t, N = inst.N;
    std::uint64_t total = 1;
    for (int i = 0; i < N; ++i) total *= std::uint64_t(t + 1);
    std::vector<int> coords(std::size_t(N), 0);
    for (std::uint64_t w = 0; w < total; ++w) {
        std::uint64_t v = w;
        Word word;
        word.t = t;
        word.letters.assign(std::size_t(N), 0);
        for (int i = N - 1; i >= 0; --i) {
            word.letters[std::size_t(i)] = int(v % std::uint64_t(t + 1));
            v /= std::uint64_t(t + 1);
        }
        if (!word.is_variable()) continue;
        int color = -1;
        bool mono = true;
        for (int a = 1; a <= t && mono; ++a) {
            Word pt = substitute(word, a);
            for (int i = 0; i < N; ++i) coords[std::size_t(i)] = pt.letters[std::size_t(i)];
            int c = inst.coloring.color(point_rank(pt), coords);
            if (color < 0)
                color = c;
            else if (c != color)
                mono = false;
        }
        if (mono) return word;
    }
    return std::nullopt;
}

}  // namespace ramsey::ref
