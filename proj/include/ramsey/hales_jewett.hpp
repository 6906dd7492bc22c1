#pragma once

#include "ramsey/caps.hpp"
#include "ramsey/rules.hpp"
#include "ramsey/threshold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// Word over [t] with 0 standing for the variable letter v. A variable word
// has at least one 0; a point has none.
struct Word {
    int t = 0;
    std::vector<int> letters;

    bool is_variable() const;
    std::string to_string() const;  // "v12v" for t <= 9, space-separated otherwise
};

// Replaces every variable occurrence by a; requires a in [1..t].
Word substitute(const Word& w, int a);

// Row-major rank of a point in [t]^N (first letter most significant).
std::uint64_t point_rank(const Word& point);

// Coloring of a cube point space, dense (colors listed in row-major rank
// order) or rule-defined: `coord:i` colors by the value at coordinate i
// (mod r); any natural-number rule is applied to rank+1.
class CubePointColoring {
public:
    static CubePointColoring dense(std::uint64_t points, int r, std::vector<std::uint8_t> colors);
    static CubePointColoring coord_rule(std::uint64_t points, int r, int coord_index);
    static CubePointColoring natural_rule(std::uint64_t points, int r, RuleColoring rule);

    int colors() const { return r_; }
    std::uint64_t points() const { return points_; }
    bool is_dense() const { return !dense_.empty() || points_ == 0; }

    // `coords` are the point's 1-based coordinate values (for coord rules).
    int color(std::uint64_t rank, const std::vector<int>& coords) const;

private:
    std::uint64_t points_ = 0;
    int r_ = 1;
    std::vector<std::uint8_t> dense_;
    int coord_index_ = 0;  // > 0 selects the coord rule
    RuleColoring rule_;
    bool has_rule_ = false;
};

struct HjInstance {
    int t = 0, N = 0;
    CubePointColoring coloring;
};

// First variable word (lex order, v < 1 < ... < t) whose line
// {w(a) : a in [t]} is monochromatic.
std::optional<Word> hj_search(const HjInstance& inst, int workers = 0);

// All combinatorial lines of [t]^N as sorted 1-based rank patterns.
std::vector<std::vector<int>> hj_lines(int t, int N, const SearchCaps& caps = {});

struct HjNumberResult {
    enum class Status { found, not_found, capped };
    Status status = Status::not_found;
    int N = 0;
    std::uint64_t nodes = 0;
};

// Least N <= n_max such that every r-coloring of [t]^N has a monochromatic
// line, by exhaustive canonical coloring enumeration.
HjNumberResult hj_number(int r, int t, int n_max, const SearchCaps& caps = {}, int workers = 0);

}  // namespace ramsey
