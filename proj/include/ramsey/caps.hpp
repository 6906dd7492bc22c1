#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Resource limits shared by the search engines. Every cap failure is loud:
// either a thrown ResourceCapExceeded or a `capped` result status, never a
// silently truncated answer.
struct SearchCaps {
    std::uint64_t max_nodes = 200'000'000;   // coloring-tree nodes per search
    std::uint64_t bit_cap = std::uint64_t(1) << 20;  // bits per exact value
    std::uint64_t max_family = 4'000'000;    // polynomials per enumerated family
    std::uint64_t dense_points_cap = std::uint64_t(1) << 24;  // dense cube storage
};

struct ResourceCapExceeded : std::runtime_error {
    explicit ResourceCapExceeded(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace ramsey
