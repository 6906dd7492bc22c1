#include "ramsey/hales_jewett.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <atomic>
#include <set>
#include <sstream>

namespace ramsey {

bool Word::is_variable() const {
    return std::find(letters.begin(), letters.end(), 0) != letters.end();
}

std::string Word::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (t > 9 && i) os << ' ';
        if (letters[i] == 0)
            os << 'v';
        else
            os << letters[i];
    }
    return os.str();
}

Word substitute(const Word& w, int a) {
    if (a < 1 || a > w.t)
        throw std::invalid_argument("substitute: letter " + std::to_string(a) + " outside [1.." +
                                    std::to_string(w.t) + "]");
    if (!w.is_variable()) throw std::invalid_argument("substitute: not a variable word");
    Word out = w;
    for (int& l : out.letters)
        if (l == 0) l = a;
    return out;
}

std::uint64_t point_rank(const Word& point) {
    std::uint64_t rank = 0;
    for (int l : point.letters) {
        if (l < 1 || l > point.t) throw std::invalid_argument("point_rank: not a point");
        rank = rank * std::uint64_t(point.t) + std::uint64_t(l - 1);
    }
    return rank;
}

CubePointColoring CubePointColoring::dense(std::uint64_t points, int r,
                                           std::vector<std::uint8_t> colors) {
    if (r < 1 || r > 255) throw std::invalid_argument("cube coloring: r outside [1..255]");
    if (colors.size() != points) throw std::invalid_argument("cube coloring: wrong color count");
    for (auto c : colors)
        if (c >= r) throw std::invalid_argument("cube coloring: color index >= r");
    CubePointColoring out;
    out.points_ = points;
    out.r_ = r;
    out.dense_ = std::move(colors);
    return out;
}

CubePointColoring CubePointColoring::coord_rule(std::uint64_t points, int r, int coord_index) {
    if (r < 1) throw std::invalid_argument("cube coloring: r must be >= 1");
    if (coord_index < 1) throw std::invalid_argument("cube coloring: coord index must be >= 1");
    CubePointColoring out;
    out.points_ = points;
    out.r_ = r;
    out.coord_index_ = coord_index;
    return out;
}

CubePointColoring CubePointColoring::natural_rule(std::uint64_t points, int r, RuleColoring rule) {
    if (r < 1) throw std::invalid_argument("cube coloring: r must be >= 1");
    if (rule.colors() > r)
        throw std::invalid_argument("cube coloring: rule emits more colors than r");
    CubePointColoring out;
    out.points_ = points;
    out.r_ = r;
    out.rule_ = std::move(rule);
    out.has_rule_ = true;
    return out;
}

int CubePointColoring::color(std::uint64_t rank, const std::vector<int>& coords) const {
    if (coord_index_ > 0) {
        if (std::size_t(coord_index_) > coords.size())
            throw std::invalid_argument("cube coloring: coord index beyond point width");
        return (coords[std::size_t(coord_index_) - 1] - 1) % r_;
    }
    if (has_rule_) return rule_.color_of(BigInt(rank + 1));
    if (rank >= dense_.size()) throw std::out_of_range("cube coloring: rank out of range");
    return dense_[rank];
}

namespace {

std::uint64_t checked_point_count(int t, int N, const SearchCaps& caps) {
    std::uint64_t count = 1;
    for (int i = 0; i < N; ++i) {
        count *= std::uint64_t(t);
        if (count > caps.dense_points_cap)
            throw ResourceCapExceeded("cube point space exceeds dense cap");
    }
    return count;
}

}  // namespace

std::optional<Word> hj_search(const HjInstance& inst, int workers) {
    const int t = inst.t, N = inst.N;
    if (t < 1 || N < 1) throw std::invalid_argument("hj_search: need t >= 1 and N >= 1");
    if (workers <= 0) workers = omp_get_max_threads();

    // Variable words in lex order = base-(t+1) odometer with digit 0 = v.
    std::uint64_t total = 1;
    for (int i = 0; i < N; ++i) total *= std::uint64_t(t + 1);

    std::atomic<std::uint64_t> best{total};

    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (std::uint64_t(workers) * 32));
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
        const std::uint64_t lo = ci * chunk;
        if (lo >= best.load(std::memory_order_relaxed)) continue;
        const std::uint64_t hi = std::min(total, lo + chunk);
        std::vector<int> digits(std::size_t(N), 0);
        std::vector<int> coords(std::size_t(N), 0);
        for (std::uint64_t w = lo; w < hi; ++w) {
            std::uint64_t v = w;
            bool has_var = false;
            for (int i = N - 1; i >= 0; --i) {
                digits[std::size_t(i)] = int(v % std::uint64_t(t + 1));
                v /= std::uint64_t(t + 1);
                if (digits[std::size_t(i)] == 0) has_var = true;
            }
            if (!has_var) continue;
            int line_color = -1;
            bool mono = true;
            for (int a = 1; a <= t && mono; ++a) {
                std::uint64_t rank = 0;
                for (int i = 0; i < N; ++i) {
                    int l = digits[std::size_t(i)] == 0 ? a : digits[std::size_t(i)];
                    coords[std::size_t(i)] = l;
                    rank = rank * std::uint64_t(t) + std::uint64_t(l - 1);
                }
                int c = inst.coloring.color(rank, coords);
                if (line_color < 0)
                    line_color = c;
                else if (c != line_color)
                    mono = false;
            }
            if (mono) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (w < cur && !best.compare_exchange_weak(cur, w)) {
                }
                break;
            }
        }
    }

    std::uint64_t w = best.load();
    if (w >= total) return std::nullopt;
    Word word;
    word.t = t;
    word.letters.assign(std::size_t(N), 0);
    for (int i = N - 1; i >= 0; --i) {
        word.letters[std::size_t(i)] = int(w % std::uint64_t(t + 1));
        w /= std::uint64_t(t + 1);
    }
    return word;
}

std::vector<std::vector<int>> hj_lines(int t, int N, const SearchCaps& caps) {
    checked_point_count(t, N, caps);
    std::uint64_t words = 1;
    for (int i = 0; i < N; ++i) {
        words *= std::uint64_t(t + 1);
        if (words > caps.dense_points_cap)
            throw ResourceCapExceeded("hj_lines: word space exceeds cap");
    }
    std::set<std::vector<int>> dedup;
    std::vector<int> digits(std::size_t(N), 0);
    for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t v = w;
        bool has_var = false;
        for (int i = N - 1; i >= 0; --i) {
            digits[std::size_t(i)] = int(v % std::uint64_t(t + 1));
            v /= std::uint64_t(t + 1);
            if (digits[std::size_t(i)] == 0) has_var = true;
        }
        if (!has_var) continue;
        std::set<int> line;
        for (int a = 1; a <= t; ++a) {
            std::uint64_t rank = 0;
            for (int i = 0; i < N; ++i) {
                int l = digits[std::size_t(i)] == 0 ? a : digits[std::size_t(i)];
                rank = rank * std::uint64_t(t) + std::uint64_t(l - 1);
            }
            line.insert(int(rank) + 1);
        }
        dedup.insert(std::vector<int>(line.begin(), line.end()));
    }
    return {dedup.begin(), dedup.end()};
}

HjNumberResult hj_number(int r, int t, int n_max, const SearchCaps& caps, int workers) {
    if (r < 1 || t < 1) throw std::invalid_argument("hj_number: need r >= 1 and t >= 1");
    HjNumberResult out;
    for (int N = 1; N <= n_max; ++N) {
        const std::uint64_t points = checked_point_count(t, N, caps);
        if (points > std::uint64_t(std::numeric_limits<int>::max()))
            throw ResourceCapExceeded("hj_number: point space too large");
        PatternSystem sys{int(points), hj_lines(t, N, caps)};
        AvoidResult res = find_avoiding_coloring(sys, r, caps, workers);
        out.nodes += res.nodes;
        if (res.status == AvoidResult::Status::capped) {
            out.status = HjNumberResult::Status::capped;
            return out;
        }
        if (res.status == AvoidResult::Status::unavoidable) {
            out.status = HjNumberResult::Status::found;
            out.N = N;
            return out;
        }
    }
    out.status = HjNumberResult::Status::not_found;
    return out;
}

}  // namespace ramsey
