#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/hales_jewett.hpp"
#include "ramsey/poly.hpp"
#include "ramsey/threshold.hpp"
#include "ramsey/window.hpp"

#include <optional>
#include <utility>

// Plain serial implementations, deliberately independent of the engine's
// pruned/parallel code paths. They exist for cross-checking and for the
// kernel benchmark; the engine never calls them.
namespace ramsey::ref {

// Full enumeration of canonical colorings; no pruning inside the tree.
AvoidResult find_avoiding_coloring(const PatternSystem& sys, int r);

// Triple loop over (a, d), straight off the definition.
std::optional<std::pair<int, int>> find_poly_config(const Coloring& c, const PolyFamily& F,
                                                    bool anchor);

// Odometer over all length-r tuples (not just sorted ones).
IprStarResult check_ip_r_star(const WindowSet& A, int r, bool distinct = true);

// Line-by-line scan of every variable word.
std::optional<Word> hj_search(const HjInstance& inst);

}  // namespace ramsey::ref
