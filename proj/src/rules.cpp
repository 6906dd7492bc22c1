#include "ramsey/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

struct RuleColoring::Node {
    enum class Kind { constant, mod, bits, compose } kind;
    int value = 0;                     // const
    std::uint64_t modulus = 0;         // mod
    std::vector<int> table;            // mod colors / compose table (row-major)
    std::vector<std::uint64_t> thresholds;  // bits
    std::shared_ptr<const Node> left, right;
    int left_colors = 0, right_colors = 0;
};

int RuleColoring::color_of(const BigInt& n) const {
    if (!root_) throw std::logic_error("RuleColoring: empty rule");
    if (n < 1) throw std::invalid_argument("RuleColoring: defined on naturals >= 1");
    const Node* node = root_.get();
    auto eval = [&](auto&& self, const Node* nd) -> int {
        switch (nd->kind) {
            case Node::Kind::constant:
                return nd->value;
            case Node::Kind::mod:
                return nd->table[(n % nd->modulus).convert_to<std::size_t>()];
            case Node::Kind::bits: {
                std::uint64_t len = bit_length(n);
                int c = 0;
                for (auto t : nd->thresholds)
                    if (t <= len) ++c;
                return c;
            }
            case Node::Kind::compose: {
                int c1 = self(self, nd->left.get());
                int c2 = self(self, nd->right.get());
                return nd->table[std::size_t(c1) * std::size_t(nd->right_colors) + std::size_t(c2)];
            }
        }
        return 0;
    };
    return eval(eval, node);
}

namespace {

struct RuleParser {
    std::string s;
    std::size_t pos = 0;

    explicit RuleParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw RuleParseError("rule syntax error at '" + (pos < s.size() ? s.substr(pos) : "<end>") +
                             "': " + msg);
    }

    bool eat(std::string_view word) {
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }

    std::uint64_t integer() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoull(s.substr(start, pos - start));
    }

    std::vector<std::uint64_t> int_list() {
        std::vector<std::uint64_t> out{integer()};
        while (pos < s.size() && s[pos] == ',') {
            ++pos;
            out.push_back(integer());
        }
        return out;
    }

    // Returns (node, colors).
    std::pair<std::shared_ptr<RuleColoring::Node>, int> rule() {
        auto node = std::make_shared<RuleColoring::Node>();
        if (eat("const:")) {
            node->kind = RuleColoring::Node::Kind::constant;
            node->value = int(integer());
            return {node, node->value + 1};
        }
        if (eat("mod:")) {
            node->kind = RuleColoring::Node::Kind::mod;
            node->modulus = integer();
            if (node->modulus == 0) fail("mod: modulus must be >= 1");
            if (!eat(":")) fail("mod: expected ':' before the color list");
            auto colors = int_list();
            if (colors.size() != node->modulus) fail("mod: need exactly m colors");
            int r = 0;
            for (auto c : colors) {
                node->table.push_back(int(c));
                r = std::max(r, int(c) + 1);
            }
            return {node, r};
        }
        if (eat("bits:")) {
            node->kind = RuleColoring::Node::Kind::bits;
            node->thresholds = int_list();
            if (!std::is_sorted(node->thresholds.begin(), node->thresholds.end()))
                fail("bits: thresholds must be ascending");
            return {node, int(node->thresholds.size()) + 1};
        }
        if (eat("compose(")) {
            node->kind = RuleColoring::Node::Kind::compose;
            auto [l, lr] = rule();
            if (!eat(";")) fail("compose: expected ';' after the first rule");
            auto [rt, rr] = rule();
            if (!eat(";table:")) fail("compose: expected ';table:'");
            auto table = int_list();
            if (!eat(")")) fail("compose: expected ')'");
            if (table.size() != std::size_t(lr) * std::size_t(rr))
                fail("compose: table needs " + std::to_string(lr * rr) + " entries");
            node->left = l;
            node->right = rt;
            node->left_colors = lr;
            node->right_colors = rr;
            int r = 0;
            for (auto c : table) {
                node->table.push_back(int(c));
                r = std::max(r, int(c) + 1);
            }
            return {node, r};
        }
        fail("expected const:, mod:, bits: or compose(");
    }
};

}  // namespace

RuleColoring parse_rule_coloring(std::string_view expr) {
    RuleParser p(expr);
    auto [node, r] = p.rule();
    if (p.pos != p.s.size()) p.fail("trailing input");
    RuleColoring rc;
    rc.root_ = node;
    rc.r_ = r;
    rc.text_ = p.s;
    return rc;
}

}  // namespace ramsey
