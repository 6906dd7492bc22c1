#pragma once

#include "ramsey/bigint.hpp"
#include "ramsey/caps.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ramsey {

// Finite generator sequence <x_1..x_k>, entries >= 1. `distinct` records
// whether the entries are pairwise distinct.
struct GenSeq {
    std::vector<std::int64_t> xs;
    bool distinct = true;

    explicit GenSeq(std::vector<std::int64_t> entries);
    std::size_t size() const { return xs.size(); }
};

GenSeq parse_genseq(const std::string& text);  // whitespace-separated entries

// Ordered disjoint index blocks H_1 < H_2 < ... over positions of a parent
// sequence: max H_i < min H_{i+1}. Positions are 1-based.
using BlockPartition = std::vector<std::vector<int>>;

// All nonempty subset sums; |result| <= 2^k - 1.
std::set<BigInt> finite_sums(const GenSeq& s);

// All nonempty subset products, exact.
std::set<BigInt> finite_products(const GenSeq& s);

// Subset sum over a nonempty 1-based index set.
BigInt x_alpha(const GenSeq& s, const std::vector<int>& alpha);

// Thrown when a tower chain blows past the bit cap; carries the chain.
struct TowerChainOverflow : std::runtime_error {
    std::vector<int> chain;  // 1-based indices, increasing
    TowerChainOverflow(std::vector<int> c, const std::string& what_arg)
        : std::runtime_error(what_arg), chain(std::move(c)) {}
};

// All exponent towers over increasing index chains i_1 < ... < i_m:
// the chain's value is x_{i_m} ^ (x_{i_{m-1}} ^ (... ^ x_{i_1})), largest
// index at the base. Requires entries >= 2 and pairwise distinct.
std::set<BigInt> exponent_towers(const GenSeq& s, std::uint64_t bit_cap = SearchCaps{}.bit_cap);

// Finds the lexicographically first (by block content) ordered block
// partition with y_n = sum over H_n of x entries, or nullopt.
std::optional<BlockPartition> find_sum_subsystem(const GenSeq& y, const GenSeq& x);

}  // namespace ramsey
