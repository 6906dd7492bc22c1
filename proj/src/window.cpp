#include "ramsey/window.hpp"

#include "ramsey/rules.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <istream>
#include <sstream>

namespace ramsey {

WindowSet WindowSet::full(int n) {
    WindowSet A(n);
    for (int i = 1; i <= n; ++i) A.insert(i);
    return A;
}

void WindowSet::insert(int i) {
    if (i < 1 || i > n_)
        throw std::invalid_argument("WindowSet: element " + std::to_string(i) + " outside [1.." +
                                    std::to_string(n_) + "]");
    member_[std::size_t(i)] = true;
}

std::vector<int> WindowSet::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (member_[std::size_t(i)]) out.push_back(i);
    return out;
}

std::size_t WindowSet::count() const {
    return std::size_t(std::count(member_.begin(), member_.end(), true));
}

WindowSet parse_window_set(std::istream& in) {
    int n;
    if (!(in >> n)) throw std::invalid_argument("window set: missing window size");
    WindowSet A(n);
    std::string tag;
    if (!(in >> tag)) throw std::invalid_argument("window set: missing 'list:' or 'rule:' line");
    if (tag == "list:") {
        int v;
        while (in >> v) A.insert(v);
    } else if (tag == "rule:") {
        std::string expr;
        std::getline(in, expr);
        RuleColoring rule = parse_rule_coloring(expr);
        for (int i = 1; i <= n; ++i)
            if (rule.color_of(i) != 0) A.insert(i);
    } else {
        throw std::invalid_argument("window set: expected 'list:' or 'rule:', got '" + tag + "'");
    }
    return A;
}

WindowSet parse_window_set_text(const std::string& text) {
    std::istringstream in(text);
    return parse_window_set(in);
}

std::string print_window_set(const WindowSet& A) {
    std::ostringstream os;
    os << A.window_end() << "\nlist:";
    for (int v : A.elements()) os << ' ' << v;
    os << '\n';
    return os.str();
}

bool is_thick(const WindowSet& A, int L) {
    if (L < 1) throw std::invalid_argument("is_thick: L must be >= 1");
    int run = 0;
    for (int i = 1; i <= A.window_end(); ++i) {
        run = A.contains(i) ? run + 1 : 0;
        if (run >= L) return true;
    }
    return false;
}

bool is_syndetic(const WindowSet& A, int g) {
    if (g < 1) throw std::invalid_argument("is_syndetic: g must be >= 1");
    const int n = A.window_end();
    // Equivalent to: no length-g subinterval of [1..n] misses A.
    int gap = 0;
    for (int i = 1; i <= n; ++i) {
        gap = A.contains(i) ? 0 : gap + 1;
        if (gap >= g) return false;
    }
    return true;
}

std::optional<Interval> find_pws_interval(const WindowSet& A, const LargenessParams& params) {
    if (params.g < 1 || params.L < 1) throw std::invalid_argument("is_pws: params must be >= 1");
    if (params.g > params.L) throw std::invalid_argument("is_pws: g must be <= L");
    const int n = A.window_end();
    // An interval qualifies iff it contains no run of g consecutive
    // non-members. Scan left to right; the first start that reaches length
    // >= L wins, extended right as far as possible.
    int i = 1;
    while (i + params.L - 1 <= n) {
        int end = i - 1;  // furthest right end with no g-run inside [i..end]
        int gap = 0;
        int blocking = 0;  // right end of the g-run that stopped the scan
        for (int j = i; j <= n; ++j) {
            gap = A.contains(j) ? 0 : gap + 1;
            if (gap >= params.g) {
                blocking = j;
                break;
            }
            end = j;
        }
        if (end - i + 1 >= params.L) return Interval{i, end};
        if (blocking == 0) return std::nullopt;  // ran out of window
        // Starts up to the run's first element either contain the run or
        // stop short of length L, so resume just past it.
        i = blocking - params.g + 2;
    }
    return std::nullopt;
}

namespace {

// DFS over sorted generator tuples: x_pos >= (distinct ? prev+1 : prev),
// keeping all subset sums inside [1..n] and disjoint from A. `sums` holds
// the FS of the chosen prefix; any prefix sum that lands in A kills every
// extension, since FS only grows.
bool ipr_dfs(const WindowSet& A, int r, bool distinct, std::int64_t prev, int depth,
             std::vector<std::int64_t>& tuple, std::vector<std::int64_t>& sums,
             std::int64_t budget) {
    const std::int64_t lo = distinct ? prev + 1 : prev;
    for (std::int64_t x = std::max<std::int64_t>(lo, 1); x <= budget; ++x) {
        // remaining entries are >= x (sorted), so the cheapest completion
        // adds (r - depth - 1) more copies of x (or x+1.. when distinct)
        std::int64_t tail = 0;
        for (int t = 1; t <= r - depth - 1; ++t) tail += distinct ? x + t : x;
        if (x + tail > budget) break;

        const std::size_t base = sums.size();
        bool hit = A.contains(int(x));
        if (!hit) {
            sums.push_back(x);
            for (std::size_t s = 0; s < base; ++s) {
                std::int64_t v = sums[s] + x;
                if (A.contains(int(v))) {
                    hit = true;
                    break;
                }
                sums.push_back(v);
            }
        }
        if (!hit) {
            tuple.push_back(x);
            if (depth + 1 == r) return true;
            if (ipr_dfs(A, r, distinct, x, depth + 1, tuple, sums, budget - x)) return true;
            tuple.pop_back();
        }
        sums.resize(base);
    }
    return false;
}

}  // namespace

IprStarResult check_ip_r_star(const WindowSet& A, int r, bool distinct, int workers) {
    if (r < 1) throw std::invalid_argument("check_ip_r_star: r must be >= 1");
    const int n = A.window_end();
    const std::int64_t min_total = distinct ? std::int64_t(r) * (r + 1) / 2 : r;
    if (min_total > n) return {IprStarResult::Status::vacuous, {}};

    if (workers <= 0) workers = omp_get_max_threads();

    // Parallel over the first entry; each worker scans its x1 values in
    // ascending order, so the per-x1 result is the lex-least counterexample
    // starting there, and the global answer is the one with least x1.
    std::atomic<std::int64_t> best_x1{n + 1};
    std::vector<std::vector<std::int64_t>> found(std::size_t(n) + 1);

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t x1 = 1; x1 <= n; ++x1) {
        if (x1 > best_x1.load(std::memory_order_relaxed)) continue;
        if (A.contains(int(x1))) continue;
        std::vector<std::int64_t> tuple{x1};
        std::vector<std::int64_t> sums{x1};
        bool ok;
        if (r == 1) {
            ok = true;
        } else {
            ok = ipr_dfs(A, r, distinct, x1, 1, tuple, sums, n - x1);
        }
        if (ok) {
            found[std::size_t(x1)] = tuple;
            std::int64_t cur = best_x1.load(std::memory_order_relaxed);
            while (x1 < cur && !best_x1.compare_exchange_weak(cur, x1)) {
            }
        }
    }

    for (std::int64_t x1 = 1; x1 <= n; ++x1)
        if (!found[std::size_t(x1)].empty())
            return {IprStarResult::Status::counterexample, found[std::size_t(x1)]};
    return {IprStarResult::Status::holds, {}};
}

}  // namespace ramsey
