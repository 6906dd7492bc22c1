#pragma once

#include "ramsey/caps.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/poly.hpp"
#include "ramsey/window.hpp"
#include "ramsey/witness.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

// Least (a, d) in lexicographic order, d >= 1, with {a} u {a+p(d) : p in F}
// (anchor optional) monochromatic inside [1..n].
std::optional<Witness> find_poly_config(const Coloring& c, const PolyFamily& F, bool anchor = true,
                                        int workers = 0);

// Least (x, y) with {x, y, x op y} monochromatic inside the window;
// strict x < y by default, matching the partition-regular family.
std::optional<Witness> find_schur(const Coloring& c, bool multiplicative,
                                  bool allow_equal = false);

struct ExpSearchResult {
    std::optional<Witness> witness;
    std::vector<std::pair<std::int64_t, std::int64_t>> skipped;  // x^y past the bit cap
};

// Least (x, y), x != y, both >= 2, with {x, y, x^y} monochromatic under the
// rule coloring. Candidates whose power blows the bit cap are skipped and
// reported.
ExpSearchResult find_exp(const RuleColoring& c, std::int64_t x_max, std::int64_t y_max,
                         std::uint64_t bit_cap = SearchCaps{}.bit_cap);

// R = { n : M(n) = {m : {m} u {m+p(n) : p in F} inside A} is pws } as a
// window set over A's window.
WindowSet config_set_R(const WindowSet& A, const PolyFamily& F, const LargenessParams& params);

struct IprVerifyAttempt {
    int r = 0;
    IprStarResult result;
};

struct IprVerifyResult {
    WindowSet R;
    std::optional<int> least_r;            // least r with R an IP_r*-in-window set
    std::vector<IprVerifyAttempt> attempts;  // every r tried, in order
};

// Computes R then scans r = 1..r_max for the least r with check_ip_r_star
// holding, recording the blocking counterexample of every failing r.
IprVerifyResult verify_ipr_pvdw(const WindowSet& A, const PolyFamily& F,
                                const LargenessParams& params, int r_max, int workers = 0);

}  // namespace ramsey
