#pragma once

#include "ramsey/bigint.hpp"
#include "ramsey/caps.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Integer polynomial with zero constant term, stored as an ascending
// coefficient vector: coeffs[i] is the coefficient of degree i.
// Canonical form: coeffs[0] == 0, trailing zeros trimmed (the zero
// polynomial is the empty-tail vector [0]). Equality is coefficient
// equality.
class IntPoly {
public:
    IntPoly() : coeffs_{0} {}

    // Throws std::invalid_argument if coeffs[0] != 0.
    explicit IntPoly(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.size() == 1; }

    // (degree, max |coefficient|); (0,0) for the zero polynomial.
    std::pair<int, BigInt> deg_coef() const;

    BigInt eval(const BigInt& x) const;

    // q with q(n) = p(n+y) - p(y); stays constant-term-free.
    IntPoly shift(const BigInt& y) const;

    // q with q(n) = p(y*n); degree-i coefficient becomes coeffs[i]*y^i.
    IntPoly dilate(const BigInt& y) const;

    auto operator<=>(const IntPoly&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

// Nonempty duplicate-free collection of IntPoly.
using PolyFamily = std::vector<IntPoly>;

// All p with deg(p) <= deg_bound and coef(p) <= coef_bound, zero polynomial
// excluded unless include_zero. Cardinality (2c+1)^d minus 1 when zero is
// excluded; throws ResourceCapExceeded past caps.max_family.
PolyFamily enumerate_family(int deg_bound, const BigInt& coef_bound, bool include_zero,
                            const SearchCaps& caps = {});

// Mini-language: terms `c*d^k`, `d^k`, `c*d`, `d` (the `*` optional),
// joined by `+`/`-`; whitespace ignored. A nonzero constant term is
// rejected with a diagnostic. Round-trips with print_poly.
IntPoly parse_poly(std::string_view text);

// Canonical ascending-degree form, e.g. "3d+d^3"; "0" for the zero polynomial.
std::string print_poly(const IntPoly& p);

// Semicolon-separated list of polynomials, e.g. "d;2d;d^2". Duplicates rejected.
PolyFamily parse_family(std::string_view text);

struct PolyParseError : std::runtime_error {
    explicit PolyParseError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace ramsey
