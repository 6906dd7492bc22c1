#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/window.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ramsey {

// Self-contained certificate of a found monochromatic pattern. Everything
// needed to re-check it from scratch lives in `params`; `elements` is the
// full sorted pattern.
struct Witness {
    std::string kind;  // vdw | poly-config | schur | product-schur | exp | sumsub | tower
    int window = 0;    // 0 when the coloring is rule-defined (unbounded values)
    int colors = 0;
    int color = 0;
    std::vector<BigInt> elements;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json provenance = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    static Witness from_json(const nlohmann::ordered_json& j);
};

// What a witness is checked against: a coloring for the coloring-based
// kinds, window sets for the set-based ones.
struct ValidationContext {
    const Coloring* coloring = nullptr;
    const RuleColoring* rule = nullptr;
    const WindowSet* set_a = nullptr;
    const WindowSet* set_b = nullptr;
    std::uint64_t bit_cap = std::uint64_t(1) << 20;
};

struct ValidationResult {
    bool ok = false;
    std::string diagnostic;
};

// Recomputes every membership and color equality from scratch; never
// trusts the witness's own element list without rebuilding it.
ValidationResult validate_witness(const Witness& w, const ValidationContext& ctx);

}  // namespace ramsey
