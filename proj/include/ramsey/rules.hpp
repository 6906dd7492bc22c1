#pragma once

#include "ramsey/bigint.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Pure, total coloring of the naturals >= 1, defined by a fixed rule
// language so colorings of unbounded values (towers, exponentials) stay
// serializable:
//   const:c                      constant color c
//   mod:m:c_0,...,c_{m-1}        color = c_{n mod m}
//   bits:t_1,...,t_k             color = #{ thresholds <= bitlength(n) }
//   compose(r1;r2;table:v...)    pair (c1,c2) mapped through a row-major
//                                r1-colors x r2-colors table
// The color count is the smallest r covering every reachable color.
class RuleColoring {
public:
    struct Node;  // defined in rules.cpp

    RuleColoring() = default;

    int colors() const { return r_; }
    int color_of(const BigInt& n) const;
    const std::string& text() const { return text_; }  // normalized expression

    // rules are values; equality is by normalized expression
    bool operator==(const RuleColoring& o) const { return r_ == o.r_ && text_ == o.text_; }

    friend RuleColoring parse_rule_coloring(std::string_view expr);

private:
    std::shared_ptr<const Node> root_;
    int r_ = 0;
    std::string text_;
};

RuleColoring parse_rule_coloring(std::string_view expr);

struct RuleParseError : std::runtime_error {
    explicit RuleParseError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace ramsey
