#include "ramsey/towers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

TowerExpr TowerExpr::lit(BigInt value) {
    if (value < 1) throw std::invalid_argument("TowerExpr: literals must be >= 1");
    TowerExpr e;
    auto node = std::make_shared<Node>();
    node->literal = std::move(value);
    e.node_ = node;
    return e;
}

TowerExpr TowerExpr::power(TowerExpr base, TowerExpr exponent) {
    TowerExpr e;
    auto node = std::make_shared<Node>();
    node->base = base.node_;
    node->exponent = exponent.node_;
    e.node_ = node;
    return e;
}

std::string TowerExpr::serialize() const {
    if (is_literal()) return node_->literal.str();
    TowerExpr b, x;
    b.node_ = node_->base;
    x.node_ = node_->exponent;
    return "(^ " + b.serialize() + " " + x.serialize() + ")";
}

namespace {

struct TowerParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("tower expression error at offset " + std::to_string(pos) +
                                    ": " + msg);
    }

    TowerExpr expr() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != '^') fail("expected '^'");
            ++pos;
            TowerExpr base = expr();
            TowerExpr exponent = expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return TowerExpr::power(std::move(base), std::move(exponent));
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a literal");
        return TowerExpr::lit(BigInt(std::string(s.substr(start, pos - start))));
    }
};

}  // namespace

TowerExpr TowerExpr::parse(std::string_view text) {
    TowerParser p{text};
    TowerExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::optional<BigInt> TowerExpr::eval(std::uint64_t bit_cap) const {
    if (is_literal()) {
        if (bit_length(node_->literal) > bit_cap) return std::nullopt;
        return node_->literal;
    }
    TowerExpr b, x;
    b.node_ = node_->base;
    x.node_ = node_->exponent;
    auto bv = b.eval(bit_cap);
    auto xv = x.eval(bit_cap);
    if (!bv || !xv) return std::nullopt;
    try {
        return checked_pow(*bv, *xv, bit_cap);
    } catch (const BitCapExceeded&) {
        return std::nullopt;
    }
}

BigInt star(std::int64_t n, const BigInt& a, const BigInt& b, std::uint64_t bit_cap) {
    if (n < 2) throw std::invalid_argument("star: n must be >= 2");
    if (a < 1 || b < 1) throw std::invalid_argument("star: a and b must be >= 1");
    return checked_mul(checked_pow(BigInt(n), a, bit_cap), b, bit_cap);
}

FSeqResult f_seq(int k, std::int64_t x, std::uint64_t bit_cap) {
    if (k < 2) throw std::invalid_argument("f_seq: defined for k >= 2");
    if (x < 1) throw std::invalid_argument("f_seq: x must be >= 1");

    TowerExpr two_x = TowerExpr::power(TowerExpr::lit(2), TowerExpr::lit(x));
    TowerExpr expr = two_x;
    for (int i = 3; i <= k; ++i) expr = TowerExpr::power(two_x, expr);

    // value via the normalized form f_k = 2^(x * f_{k-1})
    std::optional<BigInt> value;
    try {
        BigInt v = checked_pow(2, x, bit_cap);
        for (int i = 3; i <= k; ++i) v = checked_pow(2, checked_mul(BigInt(x), v, bit_cap), bit_cap);
        value = v;
    } catch (const BitCapExceeded&) {
        value = std::nullopt;
    }
    return {std::move(expr), std::move(value)};
}

PfPatternResult pf_pattern(std::int64_t n, const GenSeq& xs,
                           const std::vector<PolyFamily>& poly_choices, int k_max,
                           std::uint64_t bit_cap) {
    if (n < 2) throw std::invalid_argument("pf_pattern: n must be >= 2");
    if (k_max < 1 || std::size_t(k_max) > xs.size())
        throw std::invalid_argument("pf_pattern: k_max must be in [1..len(xs)]");
    if (poly_choices.size() + 1 < std::size_t(k_max))
        throw std::invalid_argument("pf_pattern: need a polynomial family per index up to k_max-1");

    PfPatternResult out;
    out.values.insert(BigInt(xs.xs[0]));  // k = 1, empty exponent sum

    // exponent sums for k-1 chosen polynomials, extended index by index
    std::vector<BigInt> sums{BigInt(0)};
    for (int k = 2; k <= k_max; ++k) {
        const PolyFamily& fam = poly_choices[std::size_t(k) - 2];
        if (fam.empty()) throw std::invalid_argument("pf_pattern: empty family in choices");
        std::vector<BigInt> next;
        for (const auto& base : sums)
            for (const auto& p : fam) next.push_back(base + p.eval(xs.xs[std::size_t(k) - 2]));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (const auto& e : next) {
            if (e < 0) {
                out.skipped.push_back("k=" + std::to_string(k) + " exponent " + e.str() +
                                      " negative");
                out.complete = false;
                continue;
            }
            try {
                out.values.insert(
                    checked_mul(BigInt(xs.xs[std::size_t(k) - 1]), checked_pow(n, e, bit_cap), bit_cap));
            } catch (const BitCapExceeded&) {
                out.skipped.push_back("k=" + std::to_string(k) + " exponent " + e.str() +
                                      " over bit cap");
                out.complete = false;
            }
        }
        sums = std::move(next);
    }
    return out;
}

LambdaCheckResult check_lambda_pattern(const GenSeq& a_seq, std::int64_t N,
                                       const std::vector<std::int64_t>& f_bounds,
                                       const RuleColoring& coloring, std::uint64_t bit_cap) {
    if (N < 0) throw std::invalid_argument("check_lambda_pattern: N must be >= 0");
    LambdaCheckResult out;
    int base_color = -1;

    auto visit = [&](const BigInt& v) -> bool {
        ++out.checked;
        int c = coloring.color_of(v);
        if (base_color < 0) {
            base_color = c;
            return false;
        }
        if (c != base_color) {
            out.failing = v;
            return true;
        }
        return false;
    };

    for (std::size_t k = 1; k <= a_seq.size(); ++k) {
        // lambda_1 in [0..N], lambda_i in [0..f_bounds[i-1]] for 2 <= i <= k-1
        std::vector<std::int64_t> bounds;
        if (k >= 2) {
            bounds.push_back(N);
            for (std::size_t i = 2; i + 1 <= k; ++i) {
                if (f_bounds.size() < i - 1)
                    throw std::invalid_argument("check_lambda_pattern: missing bound for lambda_" +
                                                std::to_string(i));
                bounds.push_back(f_bounds[i - 2]);
            }
        }
        std::vector<std::int64_t> lambda(bounds.size(), 0);
        while (true) {
            BigInt exp = 0;
            for (std::size_t i = 0; i < lambda.size(); ++i) exp += BigInt(lambda[i]) * a_seq.xs[i];
            try {
                BigInt v = checked_mul(BigInt(a_seq.xs[k - 1]), checked_pow(2, exp, bit_cap), bit_cap);
                if (visit(v)) return out;
            } catch (const BitCapExceeded&) {
                std::ostringstream os;
                os << "k=" << k << " lambda=(";
                for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
                os << ") over bit cap";
                out.skipped.push_back(os.str());
            }
            // next lambda vector, rightmost position fastest
            std::size_t i = lambda.size();
            while (i > 0 && lambda[i - 1] == bounds[i - 1]) lambda[--i] = 0;
            if (i == 0) break;
            ++lambda[i - 1];
        }
    }
    return out;
}

namespace {

FepSearchResult fep_search_impl(const std::vector<std::vector<std::int64_t>>& candidates,
                                const RuleColoring& coloring, std::uint64_t bit_cap) {
    FepSearchResult out;
    const std::size_t size = candidates.size();
    std::vector<std::int64_t> pick(size, 0);
    std::vector<std::size_t> idx(size, 0);

    // odometer over per-position candidate lists, lexicographic
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == size) {
            std::vector<std::int64_t> xs(pick.begin(), pick.end());
            GenSeq seq(xs);
            if (!seq.distinct) return false;
            std::set<BigInt> fep;
            try {
                fep = exponent_towers(seq, bit_cap);
            } catch (const TowerChainOverflow& e) {
                std::ostringstream os;
                os << "sequence (";
                for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
                os << ") skipped: " << e.what();
                out.skipped.push_back(os.str());
                return false;
            }
            int color = -1;
            for (const auto& v : fep) {
                int c = coloring.color_of(v);
                if (color < 0)
                    color = c;
                else if (c != color)
                    return false;
            }
            out.sequence = seq;
            out.color = color;
            return true;
        }
        for (std::size_t i = 0; i < candidates[pos].size(); ++i) {
            pick[pos] = candidates[pos][i];
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) out.exhausted = true;
    return out;
}

}  // namespace

FepSearchResult fep_monochrome_search(std::int64_t lo, std::int64_t hi, int set_size,
                                      const RuleColoring& coloring, std::uint64_t bit_cap) {
    if (set_size < 1) throw std::invalid_argument("fep_monochrome_search: set size must be >= 1");
    if (lo < 2) throw std::invalid_argument("fep_monochrome_search: range must start at >= 2");

    FepSearchResult out;
    // increasing tuples from [lo..hi] in lex order
    std::vector<std::int64_t> xs(std::size_t(set_size), 0);
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t from) -> bool {
        if (pos == xs.size()) {
            GenSeq seq(xs);
            std::set<BigInt> fep;
            try {
                fep = exponent_towers(seq, bit_cap);
            } catch (const TowerChainOverflow& e) {
                std::ostringstream os;
                os << "sequence (";
                for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
                os << ") skipped: " << e.what();
                out.skipped.push_back(os.str());
                return false;
            }
            int color = -1;
            for (const auto& v : fep) {
                int c = coloring.color_of(v);
                if (color < 0)
                    color = c;
                else if (c != color)
                    return false;
            }
            out.sequence = seq;
            out.color = color;
            return true;
        }
        for (std::int64_t v = from; v <= hi - std::int64_t(xs.size() - pos - 1); ++v) {
            xs[pos] = v;
            if (self(self, pos + 1, v + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, lo)) out.exhausted = true;
    return out;
}

FepSearchResult fep_monochrome_search(const std::vector<std::vector<std::int64_t>>& candidates,
                                      const RuleColoring& coloring, std::uint64_t bit_cap) {
    if (candidates.empty())
        throw std::invalid_argument("fep_monochrome_search: no candidate lists");
    for (const auto& list : candidates) {
        if (list.empty()) throw std::invalid_argument("fep_monochrome_search: empty candidate list");
        for (auto v : list)
            if (v < 2)
                throw std::invalid_argument("fep_monochrome_search: candidates must be >= 2");
    }
    return fep_search_impl(candidates, coloring, bit_cap);
}

}  // namespace ramsey
