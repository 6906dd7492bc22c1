#pragma once

#include "ramsey/rules.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ramsey {

// Total r-coloring of [1..n], colors in [0..r).
class Coloring {
public:
    Coloring() = default;
    Coloring(int n, int r, std::vector<int> assign);
    static Coloring constant(int n, int r, int color = 0);

    int window_end() const { return n_; }
    int colors() const { return r_; }
    int color_of(int i) const;
    const std::vector<int>& assignment() const { return assign_; }

    bool operator==(const Coloring&) const = default;

private:
    int n_ = 0, r_ = 1;
    std::vector<int> assign_;
};

// Either a dense window coloring or a rule coloring of all naturals.
using AnyColoring = std::variant<Coloring, RuleColoring>;

// Dense file format: first line `n r`, then n color indices. Rule format:
// a single line `rule: <rule-expr>`. Round-trips with print_coloring.
AnyColoring parse_coloring(std::istream& in);
AnyColoring parse_coloring_text(const std::string& text);
std::string print_coloring(const AnyColoring& c);

struct ColoringParseError : std::runtime_error {
    explicit ColoringParseError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace ramsey
