#include "ramsey/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

namespace {

void trim_trailing_zeros(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_ = {0};
    if (coeffs_[0] != 0)
        throw std::invalid_argument("IntPoly: nonzero constant term " + coeffs_[0].str());
    trim_trailing_zeros(coeffs_);
}

std::pair<int, BigInt> IntPoly::deg_coef() const {
    if (is_zero()) return {0, 0};
    BigInt m = 0;
    for (const auto& c : coeffs_) {
        BigInt a = abs(c);
        if (a > m) m = a;
    }
    return {int(coeffs_.size()) - 1, m};
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::shift(const BigInt& y) const {
    // p(n+y) - p(y): expand each c_i (n+y)^i binomially and drop the
    // degree-0 column, which is exactly p(y).
    if (y == 0) return *this;
    const std::size_t n = coeffs_.size();
    std::vector<BigInt> ypow(n, 1);
    for (std::size_t k = 1; k < n; ++k) ypow[k] = ypow[k - 1] * y;
    std::vector<BigInt> out(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        BigInt binom = BigInt(i);  // C(i, 1)
        for (std::size_t j = 1; j <= i; ++j) {
            out[j] += coeffs_[i] * binom * ypow[i - j];
            binom = binom * BigInt(i - j) / BigInt(j + 1);  // -> C(i, j+1)
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::dilate(const BigInt& y) const {
    std::vector<BigInt> out = coeffs_;
    BigInt ypow = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
        ypow *= y;
        out[i] *= ypow;
    }
    return IntPoly(std::move(out));
}

PolyFamily enumerate_family(int deg_bound, const BigInt& coef_bound, bool include_zero,
                            const SearchCaps& caps) {
    if (deg_bound < 0 || coef_bound < 0)
        throw std::invalid_argument("enumerate_family: negative bound");
    if (deg_bound < 1 && !include_zero)
        throw std::invalid_argument("enumerate_family: deg_bound 0 without include_zero");

    BigInt width = 2 * coef_bound + 1;
    BigInt total = 1;
    for (int i = 0; i < deg_bound; ++i) {
        total *= width;
        if (total > caps.max_family)
            throw ResourceCapExceeded("enumerate_family: " + total.str() + " polynomials exceed cap " +
                                      std::to_string(caps.max_family));
    }

    PolyFamily out;
    std::vector<BigInt> digits(std::size_t(deg_bound), -coef_bound);
    const std::uint64_t count = total.convert_to<std::uint64_t>();
    for (std::uint64_t it = 0; it < count; ++it) {
        std::vector<BigInt> coeffs(std::size_t(deg_bound) + 1, 0);
        bool zero = true;
        for (int i = 0; i < deg_bound; ++i) {
            coeffs[std::size_t(i) + 1] = digits[std::size_t(i)];
            if (digits[std::size_t(i)] != 0) zero = false;
        }
        if (!zero || include_zero) out.emplace_back(std::move(coeffs));
        for (int i = 0; i < deg_bound; ++i) {
            if (digits[std::size_t(i)] < coef_bound) {
                ++digits[std::size_t(i)];
                break;
            }
            digits[std::size_t(i)] = -coef_bound;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Parser {
    std::string s;
    std::size_t pos = 0;

    explicit Parser(std::string_view text) {
        s.reserve(text.size());
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError("polynomial syntax error at '" +
                             (done() ? std::string("<end>") : s.substr(pos)) + "': " + msg);
    }

    BigInt number() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected a number");
        return BigInt(s.substr(start, pos - start));
    }

    // One term: [INT ['*']] 'd' ['^' INT]  |  INT.  Adds into coeffs.
    void term(int sign, std::vector<BigInt>& coeffs) {
        BigInt coef = 1;
        bool saw_coef = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            saw_coef = true;
            if (!done() && peek() == '*') ++pos;
        }
        std::size_t deg = 0;
        if (!done() && peek() == 'd') {
            ++pos;
            deg = 1;
            if (!done() && peek() == '^') {
                ++pos;
                BigInt e = number();
                if (e > 64) fail("exponent too large");
                deg = e.convert_to<std::size_t>();
            }
        } else if (!saw_coef) {
            fail("expected a term");
        }
        if (coeffs.size() < deg + 1) coeffs.resize(deg + 1, 0);
        coeffs[deg] += sign * coef;
    }
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
    Parser p(text);
    if (p.done()) p.fail("empty polynomial");
    std::vector<BigInt> coeffs(1, 0);
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
        sign = p.peek() == '-' ? -1 : 1;
        ++p.pos;
    }
    p.term(sign, coeffs);
    while (!p.done()) {
        char op = p.peek();
        if (op != '+' && op != '-') p.fail("expected '+' or '-'");
        ++p.pos;
        p.term(op == '-' ? -1 : 1, coeffs);
    }
    if (coeffs[0] != 0)
        throw PolyParseError("nonzero constant term " + coeffs[0].str() +
                             " (polynomials here must vanish at 0)");
    return IntPoly(std::move(coeffs));
}

std::string print_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        BigInt a = abs(c[i]);
        if (c[i] < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (a != 1) os << a.str();
        os << 'd';
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

PolyFamily parse_family(std::string_view text) {
    PolyFamily out;
    std::size_t start = 0;
    std::string s(text);
    while (start <= s.size()) {
        std::size_t end = s.find(';', start);
        if (end == std::string::npos) end = s.size();
        std::string part = s.substr(start, end - start);
        if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(part));
        start = end + 1;
    }
    if (out.empty()) throw PolyParseError("empty polynomial family");
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PolyParseError("duplicate polynomial in family");
    return out;
}

}  // namespace ramsey
