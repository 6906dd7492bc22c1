#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;

// Bits needed to write |v| in binary; 0 for v == 0.
inline std::uint64_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

// Thrown when an exact value would exceed the configured bit cap.
// `what_arg` should identify the offending candidate (chain, element, ...).
struct BitCapExceeded : std::runtime_error {
    explicit BitCapExceeded(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// a * b, refusing results wider than bit_cap bits. The check runs before
// the multiply, so no oversized temporary is ever materialized.
inline BigInt checked_mul(const BigInt& a, const BigInt& b, std::uint64_t bit_cap) {
    if (a != 0 && b != 0 && bit_length(a) + bit_length(b) > bit_cap + 1)
        throw BitCapExceeded("product exceeds bit cap");
    BigInt r = a * b;
    if (bit_length(r) > bit_cap) throw BitCapExceeded("product exceeds bit cap");
    return r;
}

// base^exp computed exactly under the same cap discipline. exp >= 0.
inline BigInt checked_pow(const BigInt& base, const BigInt& exp, std::uint64_t bit_cap) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    if (exp == 0) return 1;
    if (base == 0) return 0;
    if (base == 1) return 1;
    if (base == -1) return (exp % 2 == 0) ? 1 : -1;
    // |base| >= 2, so the result needs at least `exp` bits.
    if (exp > BigInt(bit_cap)) throw BitCapExceeded("power exceeds bit cap");
    std::uint64_t e = exp.convert_to<std::uint64_t>();
    BigInt acc = 1, sq = base;
    while (e > 0) {
        if (e & 1) acc = checked_mul(acc, sq, bit_cap);
        e >>= 1;
        if (e > 0) sq = checked_mul(sq, sq, bit_cap);
    }
    return acc;
}

}  // namespace ramsey
