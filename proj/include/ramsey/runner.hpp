#pragma once

#include "ramsey/caps.hpp"
#include "ramsey/config_search.hpp"
#include "ramsey/hales_jewett.hpp"
#include "ramsey/poly.hpp"
#include "ramsey/poly_cube.hpp"
#include "ramsey/report.hpp"
#include "ramsey/seqsets.hpp"
#include "ramsey/sumsub.hpp"
#include "ramsey/threshold.hpp"
#include "ramsey/towers.hpp"
#include "ramsey/window.hpp"
#include "ramsey/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// One function per CLI subcommand (or documented mode). Everything except
// the perf block of the returned Report is a deterministic function of the
// arguments, independent of the worker count.
struct RunOptions {
    SearchCaps caps;
    int workers = 0;  // 0 = library default
};

Report run_fs(const GenSeq& s);
Report run_fp(const GenSeq& s);
Report run_fep(const GenSeq& s, const RunOptions& opt = {});
Report run_fep_search_range(std::int64_t lo, std::int64_t hi, int set_size,
                            const RuleColoring& coloring, const RunOptions& opt = {});
Report run_fep_search_lists(const std::vector<std::vector<std::int64_t>>& candidates,
                            const RuleColoring& coloring, const RunOptions& opt = {});
Report run_sumsub_check(const GenSeq& y, const GenSeq& x);
Report run_find_config(const Coloring& c, const PolyFamily& F, bool anchor,
                       const RunOptions& opt = {});
Report run_threshold_vdw(int k, int r, int n_max, const RunOptions& opt = {});
Report run_threshold_poly(const PolyFamily& F, int r, int n_max, bool anchor,
                          const RunOptions& opt = {});
Report run_schur_threshold(int r, bool multiplicative, int n_max, bool allow_equal,
                           const RunOptions& opt = {});
Report run_schur_find(const Coloring& c, bool multiplicative, bool allow_equal);
Report run_exp_search(const RuleColoring& c, std::int64_t x_max, std::int64_t y_max,
                      const RunOptions& opt = {});
Report run_hj_search(const HjInstance& inst, const RunOptions& opt = {});
Report run_hj_number(int r, int t, int n_max, const RunOptions& opt = {});
Report run_phj_search(const PhjInstance& inst, const RunOptions& opt = {});
Report run_phj_embed(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                     const GenSeq& xs, const std::vector<BigInt>& coeffs);
Report run_config_R(const WindowSet& A, const PolyFamily& F, const LargenessParams& params);
Report run_ipstar_check(const WindowSet& A, int r, bool distinct, const RunOptions& opt = {});
Report run_ipr_verify(const WindowSet& A, const PolyFamily& F, const LargenessParams& params,
                      int r_max, const RunOptions& opt = {});
Report run_sumsub_search(const WindowSet& A, const WindowSet* B, const GenSeq& x,
                         const PolyFamily& F, int N_target, const RunOptions& opt = {});
Report run_tower_star(std::int64_t n, const BigInt& a, const BigInt& b,
                      const RunOptions& opt = {});
Report run_tower_f(int k, std::int64_t x, const RunOptions& opt = {});
Report run_tower_eval(const std::string& expr, const RunOptions& opt = {});
Report run_pf_pattern(std::int64_t n, const GenSeq& xs,
                      const std::vector<PolyFamily>& poly_choices, int k_max,
                      const RunOptions& opt = {});
Report run_lambda_check(const GenSeq& a_seq, std::int64_t N,
                        const std::vector<std::int64_t>& f_bounds, const RuleColoring& coloring,
                        const RunOptions& opt = {});
Report run_verify_witness(const Witness& w, const ValidationContext& ctx);

}  // namespace ramsey
