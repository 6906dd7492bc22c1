#pragma once

#include "ramsey/caps.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

// Ground set [1..n] plus the forbidden monochromatic patterns (sorted
// element lists). A coloring "avoids" the system when no pattern is
// monochromatic under it.
struct PatternSystem {
    int n = 0;
    std::vector<std::vector<int>> patterns;
};

struct AvoidResult {
    enum class Status { avoidable, unavoidable, capped };
    Status status = Status::unavoidable;
    std::vector<int> coloring;  // lex-least canonical avoiding coloring, when avoidable
    std::uint64_t nodes = 0;
};

// Exhaustive search over canonical colorings (color of element 1 fixed to
// 0, colors renamed by first use) with mono-pattern pruning. Parallel over
// canonical prefixes; the returned coloring is the lexicographically least
// avoiding one regardless of worker count.
AvoidResult find_avoiding_coloring(const PatternSystem& sys, int r, const SearchCaps& caps = {},
                                   int workers = 0);

// All candidate configurations {a} U {a+p(d) : p in F} (anchor optional)
// lying inside [1..n], deduplicated as element sets, over d >= 1.
std::vector<std::vector<int>> poly_configs(int n, const PolyFamily& F, bool anchor);

// Schur triples {x, y, x op y} inside [1..n]; allow_equal admits x == y.
std::vector<std::vector<int>> schur_triples(int n, bool multiplicative, bool allow_equal);

struct ThresholdResult {
    enum class Status { found, not_found, capped };
    Status status = Status::not_found;
    int n = 0;           // least unavoidable window when found
    int searched_to = 0; // largest window fully searched
    Coloring avoiding;   // avoiding coloring of the largest avoidable window
    std::uint64_t nodes = 0;
};

// Least n <= n_max such that every r-coloring of [1..n] contains a
// monochromatic configuration for F, with the n-1 avoiding coloring as
// certificate.
ThresholdResult pvdw_threshold(const PolyFamily& F, int r, int n_max, bool anchor = true,
                               const SearchCaps& caps = {}, int workers = 0);

ThresholdResult schur_threshold(int r, bool multiplicative, int n_max, bool allow_equal = true,
                                const SearchCaps& caps = {}, int workers = 0);

}  // namespace ramsey
