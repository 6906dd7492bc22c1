#include "ramsey/sumsub.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

namespace {

using json = nlohmann::ordered_json;

// FS u FP of the prefix y_1..y_N, exact.
std::set<BigInt> fs_fp(const std::vector<std::int64_t>& y) {
    GenSeq s(y);
    std::set<BigInt> out = finite_sums(s);
    auto fp = finite_products(s);
    out.insert(fp.begin(), fp.end());
    return out;
}

// Anchor set for the prefix: all a with a + p(v) in A for every p and
// every v in values.
WindowSet anchor_set(const WindowSet& A, const PolyFamily& F, const std::set<BigInt>& values) {
    const int W = A.window_end();
    WindowSet out(W);
    for (int a = 1; a <= W; ++a) {
        bool ok = true;
        for (const auto& p : F) {
            for (const auto& v : values) {
                BigInt e = a + p.eval(v);
                if (e < 1 || e > W || !A.contains(e.convert_to<int>())) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.insert(a);
    }
    return out;
}

struct Search {
    const WindowSet& A;
    const WindowSet* B;
    const GenSeq& x;
    const PolyFamily& F;
    int N_target;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;

    std::vector<std::int64_t> y;
    BlockPartition blocks;
    std::vector<WindowSet> anchor_sets;
    std::optional<SumsubResult> found;

    bool accept_prefix() {
        // every FP value of the prefix must already sit in B
        if (B) {
            for (const auto& v : finite_products(GenSeq(y)))
                if (v > B->window_end() || !B->contains(v.convert_to<int>())) return false;
        }
        WindowSet anchors = anchor_set(A, F, fs_fp(y));
        if (anchors.count() == 0) return false;
        anchor_sets.push_back(std::move(anchors));
        return true;
    }

    bool extend(int min_pos) {
        if (int(blocks.size()) == N_target) {
            finish();
            return true;
        }
        std::vector<int> subset;
        return subsets(min_pos, subset, 0);
    }

    // nonempty subsets of positions [from..k] in lex order of content
    bool subsets(int from, std::vector<int>& subset, std::int64_t sum) {
        for (int i = from; i <= int(x.size()); ++i) {
            if (++nodes > node_cap)
                throw ResourceCapExceeded("sumsub_pattern_search: block enumeration cap");
            subset.push_back(i);
            const std::int64_t block_sum = sum + x.xs[std::size_t(i) - 1];
            blocks.push_back(subset);
            y.push_back(block_sum);
            if (accept_prefix()) {
                if (extend(subset.back() + 1)) return true;
                anchor_sets.pop_back();
            }
            y.pop_back();
            blocks.pop_back();
            if (subsets(i + 1, subset, block_sum)) return true;
            subset.pop_back();
        }
        return false;
    }

    void finish() {
        SumsubResult res;
        res.y = y;
        res.blocks = blocks;
        res.anchor_sets = anchor_sets;
        for (const auto& s : anchor_sets) res.anchors.emplace_back(s.elements().front());

        Witness& w = res.witness;
        w.kind = "sumsub";
        w.window = A.window_end();
        w.colors = 1;
        w.color = 0;
        std::set<BigInt> elems;
        for (const auto& v : fs_fp(y))
            for (const auto& p : F) elems.insert(res.anchors.back() + p.eval(v));
        w.elements.assign(elems.begin(), elems.end());
        json xj = json::array();
        for (auto v : x.xs) xj.push_back(BigInt(v).str());
        w.params["x"] = std::move(xj);
        json bj = json::array();
        for (const auto& b : blocks) bj.push_back(b);
        w.params["blocks"] = std::move(bj);
        json fj = json::array();
        for (const auto& p : F) fj.push_back(print_poly(p));
        w.params["family"] = std::move(fj);
        json aj = json::array();
        for (const auto& a : res.anchors) aj.push_back(a.str());
        w.params["anchors"] = std::move(aj);
        w.params["product_set"] = B != nullptr;
        w.provenance["search_order"] = "blocks lexicographic by content";
        w.provenance["caps"] = json::object();
        found = std::move(res);
    }
};

}  // namespace

std::optional<SumsubResult> sumsub_pattern_search(const WindowSet& A, const WindowSet* B,
                                                  const GenSeq& x, const PolyFamily& F,
                                                  int N_target, const SearchCaps& caps) {
    if (N_target < 1) throw std::invalid_argument("sumsub_pattern_search: N_target must be >= 1");
    if (F.empty()) throw std::invalid_argument("sumsub_pattern_search: empty family");
    Search search{A, B, x, F, N_target, caps.max_nodes};
    search.extend(1);
    return search.found;
}

}  // namespace ramsey
