#pragma once

#include "ramsey/bigint.hpp"
#include "ramsey/caps.hpp"
#include "ramsey/poly.hpp"
#include "ramsey/rules.hpp"
#include "ramsey/seqsets.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ramsey {

// Exponential expression tree: a literal natural or base^exponent.
// Serialized in prefix form, e.g. (^ 2 (^ 3 2)).
class TowerExpr {
public:
    static TowerExpr lit(BigInt value);
    static TowerExpr power(TowerExpr base, TowerExpr exponent);
    static TowerExpr parse(std::string_view text);

    bool is_literal() const { return node_->base == nullptr; }
    std::string serialize() const;

    // Exact value, or nullopt when it would exceed bit_cap bits.
    std::optional<BigInt> eval(std::uint64_t bit_cap) const;

private:
    struct Node {
        BigInt literal;
        std::shared_ptr<const Node> base, exponent;
    };
    std::shared_ptr<const Node> node_;
};

// a star_n b = n^a * b, exact.
BigInt star(std::int64_t n, const BigInt& a, const BigInt& b,
            std::uint64_t bit_cap = SearchCaps{}.bit_cap);

struct FSeqResult {
    TowerExpr expr;             // (2^x)^(f_{k-1}(x)) unfolded symbolically
    std::optional<BigInt> value;  // exact value when under the cap
};

// f_2(x) = 2^x, f_{k+1}(x) = (2^x)^(f_k(x)); the value is evaluated via
// the normalized form 2^(x * f_{k-1}(x)).
FSeqResult f_seq(int k, std::int64_t x, std::uint64_t bit_cap = SearchCaps{}.bit_cap);

struct PfPatternResult {
    std::set<BigInt> values;
    std::vector<std::string> skipped;  // overflow / negative-exponent records
    bool complete = true;
};

// Pattern values x_k * n^(p_1(x_1) + ... + p_{k-1}(x_{k-1})) over k <=
// k_max and all polynomial choices p_i from poly_choices[i-1]; k = 1
// contributes x_1 itself. Elements past the cap (or with a negative
// exponent sum) are recorded and omitted.
PfPatternResult pf_pattern(std::int64_t n, const GenSeq& xs,
                           const std::vector<PolyFamily>& poly_choices, int k_max,
                           std::uint64_t bit_cap = SearchCaps{}.bit_cap);

struct LambdaCheckResult {
    std::optional<BigInt> failing;     // first element off the base color
    std::vector<std::string> skipped;  // cap overflows
    std::uint64_t checked = 0;
};

// Enumerates a_k * 2^(sum lambda_i a_i) over k <= len(a), 0 <= lambda_1 <=
// N and 0 <= lambda_i <= f_bounds[i-1] for 2 <= i <= k-1, in (k, lambda)
// lexicographic order; returns the first element whose color differs from
// the first element's.
LambdaCheckResult check_lambda_pattern(const GenSeq& a_seq, std::int64_t N,
                                       const std::vector<std::int64_t>& f_bounds,
                                       const RuleColoring& coloring,
                                       std::uint64_t bit_cap = SearchCaps{}.bit_cap);

struct FepSearchResult {
    std::optional<GenSeq> sequence;
    int color = 0;
    std::vector<std::string> skipped;  // sequences dropped for cap overflow
    bool exhausted = false;            // searched the whole range without a hit
};

// First increasing sequence (canonical lex order) drawn from [lo..hi] (or
// from per-position candidate lists) whose full FEP is monochromatic.
FepSearchResult fep_monochrome_search(std::int64_t lo, std::int64_t hi, int set_size,
                                      const RuleColoring& coloring,
                                      std::uint64_t bit_cap = SearchCaps{}.bit_cap);
FepSearchResult fep_monochrome_search(const std::vector<std::vector<std::int64_t>>& candidates,
                                      const RuleColoring& coloring,
                                      std::uint64_t bit_cap = SearchCaps{}.bit_cap);

}  // namespace ramsey
