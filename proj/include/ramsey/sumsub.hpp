#pragma once

#include "ramsey/caps.hpp"
#include "ramsey/poly.hpp"
#include "ramsey/seqsets.hpp"
#include "ramsey/window.hpp"
#include "ramsey/witness.hpp"

#include <optional>
#include <vector>

namespace ramsey {

struct SumsubResult {
    std::vector<std::int64_t> y;       // subsystem generators, y_n = block sum
    BlockPartition blocks;             // ordered disjoint blocks into x
    std::vector<BigInt> anchors;       // least anchor a(N) per N = 1..N_target
    std::vector<WindowSet> anchor_sets;  // full anchor sets, ready for is_pws
    Witness witness;                   // kind "sumsub", re-checkable against A (and B)
};

// Backtracks over ordered block partitions of x (canonical lex order of
// block content); accepts the first subsystem y of length N_target whose
// anchor sets {a : a + p(y') in A for all p in F, y' in FS u FP(y_1..y_N)}
// are nonempty for every N <= N_target, with FP(y_1..y_N_target) inside B
// when B is supplied.
std::optional<SumsubResult> sumsub_pattern_search(const WindowSet& A, const WindowSet* B,
                                                  const GenSeq& x, const PolyFamily& F,
                                                  int N_target, const SearchCaps& caps = {});

}  // namespace ramsey
