#include "ramsey/seqsets.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace ramsey {

GenSeq::GenSeq(std::vector<std::int64_t> entries) : xs(std::move(entries)) {
    if (xs.empty()) throw std::invalid_argument("GenSeq: empty sequence");
    for (auto v : xs)
        if (v < 1) throw std::invalid_argument("GenSeq: entries must be >= 1");
    std::unordered_set<std::int64_t> seen(xs.begin(), xs.end());
    distinct = seen.size() == xs.size();
}

GenSeq parse_genseq(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::int64_t> xs;
    std::int64_t v;
    while (in >> v) xs.push_back(v);
    if (!in.eof()) throw std::invalid_argument("GenSeq: bad token in '" + text + "'");
    return GenSeq(std::move(xs));
}

namespace {

constexpr std::size_t kMaxSubsetLen = 30;  // 2^30 subsets is already a resource problem

void check_len(const GenSeq& s) {
    if (s.size() > kMaxSubsetLen)
        throw ResourceCapExceeded("generator sequence longer than " + std::to_string(kMaxSubsetLen));
}

}  // namespace

std::set<BigInt> finite_sums(const GenSeq& s) {
    check_len(s);
    std::set<BigInt> out;
    const std::uint64_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
        BigInt sum = 0;
        for (std::uint64_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t(1) << i)) sum += s.xs[i];
        out.insert(std::move(sum));
    }
    return out;
}

std::set<BigInt> finite_products(const GenSeq& s) {
    check_len(s);
    std::set<BigInt> out;
    const std::uint64_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
        BigInt prod = 1;
        for (std::uint64_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t(1) << i)) prod *= s.xs[i];
        out.insert(std::move(prod));
    }
    return out;
}

BigInt x_alpha(const GenSeq& s, const std::vector<int>& alpha) {
    if (alpha.empty()) throw std::invalid_argument("x_alpha: empty index set");
    BigInt sum = 0;
    for (int i : alpha) {
        if (i < 1 || std::size_t(i) > s.size())
            throw std::invalid_argument("x_alpha: index " + std::to_string(i) + " out of range");
        sum += s.xs[std::size_t(i) - 1];
    }
    return sum;
}

std::set<BigInt> exponent_towers(const GenSeq& s, std::uint64_t bit_cap) {
    check_len(s);
    if (!s.distinct) throw std::invalid_argument("exponent_towers: entries must be distinct");
    for (auto v : s.xs)
        if (v < 2) throw std::invalid_argument("exponent_towers: entries must be >= 2");

    std::set<BigInt> out;
    // DFS over increasing chains; `exp` is the value of the chain so far,
    // which becomes the exponent of the next (larger-index) entry.
    std::vector<int> chain;
    auto rec = [&](auto&& self, std::size_t next, const BigInt& exp) -> void {
        for (std::size_t i = next; i < s.size(); ++i) {
            chain.push_back(int(i) + 1);
            BigInt val;
            try {
                val = checked_pow(BigInt(s.xs[i]), exp, bit_cap);
            } catch (const BitCapExceeded&) {
                std::ostringstream os;
                os << "tower chain (";
                for (std::size_t j = 0; j < chain.size(); ++j) os << (j ? " " : "") << chain[j];
                os << ") exceeds bit cap " << bit_cap;
                throw TowerChainOverflow(chain, os.str());
            }
            out.insert(val);
            self(self, i + 1, val);
            chain.pop_back();
        }
    };
    rec(rec, 0, BigInt(1));
    return out;
}

namespace {

// Enumerates nonempty subsets of positions [from..k] in lexicographic order
// of content, invoking f(subset, sum). f returns true to stop.
bool lex_subsets(const GenSeq& x, int from, std::vector<int>& subset, BigInt& sum,
                 const std::function<bool(const std::vector<int>&, const BigInt&)>& f) {
    for (int i = from; i <= int(x.size()); ++i) {
        subset.push_back(i);
        sum += x.xs[std::size_t(i) - 1];
        if (f(subset, sum)) return true;
        if (lex_subsets(x, i + 1, subset, sum, f)) return true;
        sum -= x.xs[std::size_t(i) - 1];
        subset.pop_back();
    }
    return false;
}

}  // namespace

std::optional<BlockPartition> find_sum_subsystem(const GenSeq& y, const GenSeq& x) {
    BlockPartition blocks;
    std::optional<BlockPartition> found;

    // Backtracking over ordered blocks, each enumerated in lex order of
    // content, so the first complete solution is the lex-first overall.
    auto place = [&](auto&& self, std::size_t n, int min_pos) -> bool {
        if (n == y.size()) {
            found = blocks;
            return true;
        }
        const BigInt target = y.xs[n];
        std::vector<int> subset;
        BigInt sum = 0;
        return lex_subsets(x, min_pos, subset, sum,
                           [&](const std::vector<int>& sub, const BigInt& s) {
                               if (s != target) return false;
                               blocks.push_back(sub);
                               bool done = self(self, n + 1, sub.back() + 1);
                               if (!done) blocks.pop_back();
                               return done;
                           });
    };
    place(place, 0, 1);
    return found;
}

}  // namespace ramsey
