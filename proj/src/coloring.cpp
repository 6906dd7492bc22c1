#include "ramsey/coloring.hpp"

#include <istream>
#include <sstream>

namespace ramsey {

Coloring::Coloring(int n, int r, std::vector<int> assign) : n_(n), r_(r), assign_(std::move(assign)) {
    if (n < 0 || r < 1) throw ColoringParseError("coloring: need n >= 0 and r >= 1");
    if (assign_.size() != std::size_t(n))
        throw ColoringParseError("coloring: expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(assign_.size()));
    for (std::size_t i = 0; i < assign_.size(); ++i)
        if (assign_[i] < 0 || assign_[i] >= r)
            throw ColoringParseError("coloring: color index " + std::to_string(assign_[i]) +
                                     " at element " + std::to_string(i + 1) + " with r = " +
                                     std::to_string(r));
}

Coloring Coloring::constant(int n, int r, int color) {
    return Coloring(n, r, std::vector<int>(std::size_t(n), color));
}

int Coloring::color_of(int i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("coloring: element " + std::to_string(i) + " outside window");
    return assign_[std::size_t(i) - 1];
}

AnyColoring parse_coloring(std::istream& in) {
    std::string first;
    while (std::getline(in, first)) {
        if (first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream head(first);
    std::string tag;
    head >> tag;
    if (tag == "rule:") {
        std::string expr;
        std::getline(head, expr);
        return parse_rule_coloring(expr);
    }
    int n = 0, r = 0;
    std::istringstream dims(first);
    if (!(dims >> n >> r)) throw ColoringParseError("coloring: expected 'n r' header or 'rule:'");
    std::vector<int> assign(std::size_t(n), 0);
    for (int i = 0; i < n; ++i)
        if (!(in >> assign[std::size_t(i)]))
            throw ColoringParseError("coloring: missing color for element " + std::to_string(i + 1));
    return Coloring(n, r, std::move(assign));
}

AnyColoring parse_coloring_text(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

std::string print_coloring(const AnyColoring& c) {
    std::ostringstream os;
    if (std::holds_alternative<RuleColoring>(c)) {
        os << "rule: " << std::get<RuleColoring>(c).text() << '\n';
        return os.str();
    }
    const Coloring& d = std::get<Coloring>(c);
    os << d.window_end() << ' ' << d.colors() << '\n';
    for (int i = 0; i < d.window_end(); ++i) os << (i ? " " : "") << d.assignment()[std::size_t(i)];
    os << '\n';
    return os.str();
}

}  // namespace ramsey
