#include "ramsey/witness.hpp"

#include "ramsey/poly.hpp"
#include "ramsey/seqsets.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

using json = nlohmann::ordered_json;

json Witness::to_json() const {
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["window"] = window;
    j["colors"] = colors;
    j["color"] = color;
    json elems = json::array();
    for (const auto& e : elements) elems.push_back(e.str());
    j["elements"] = std::move(elems);
    j["params"] = params;
    j["provenance"] = provenance;
    return j;
}

Witness Witness::from_json(const json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw std::invalid_argument("witness: unsupported schema");
    Witness w;
    w.kind = j.at("kind").get<std::string>();
    w.window = j.at("window").get<int>();
    w.colors = j.at("colors").get<int>();
    w.color = j.at("color").get<int>();
    for (const auto& e : j.at("elements")) w.elements.emplace_back(e.get<std::string>());
    w.params = j.value("params", json::object());
    w.provenance = j.value("provenance", json::object());
    return w;
}

namespace {

ValidationResult fail(const std::string& why) { return {false, why}; }

// every element must carry the witness color under the supplied coloring
ValidationResult check_colors(const Witness& w, const ValidationContext& ctx,
                              const std::set<BigInt>& elems) {
    if (elems.empty()) return fail("empty element set");
    for (const auto& e : elems) {
        if (e < 1) return fail("element " + e.str() + " below 1");
        if (ctx.coloring) {
            if (e > ctx.coloring->window_end())
                return fail("element " + e.str() + " outside window [1.." +
                            std::to_string(ctx.coloring->window_end()) + "]");
            if (w.window != ctx.coloring->window_end()) return fail("window mismatch with context");
            if (w.colors != ctx.coloring->colors()) return fail("color count mismatch with context");
            if (ctx.coloring->color_of(e.convert_to<int>()) != w.color)
                return fail("element " + e.str() + " has color " +
                            std::to_string(ctx.coloring->color_of(e.convert_to<int>())) +
                            ", witness claims " + std::to_string(w.color));
        } else if (ctx.rule) {
            if (w.colors != ctx.rule->colors()) return fail("color count mismatch with rule");
            if (ctx.rule->color_of(e) != w.color)
                return fail("element " + e.str() + " has color " +
                            std::to_string(ctx.rule->color_of(e)) + ", witness claims " +
                            std::to_string(w.color));
        } else {
            return fail("no coloring in context for kind " + w.kind);
        }
    }
    return {true, ""};
}

ValidationResult check_elements_match(const Witness& w, const std::set<BigInt>& expected) {
    std::set<BigInt> got(w.elements.begin(), w.elements.end());
    if (got != expected) return fail("element list does not match the recomputed pattern");
    return {true, ""};
}

ValidationResult validate_poly_config(const Witness& w, const ValidationContext& ctx) {
    BigInt a(w.params.at("a").get<std::string>());
    BigInt d(w.params.at("d").get<std::string>());
    bool anchor = w.params.at("anchor").get<bool>();
    if (d < 1) return fail("d must be >= 1");
    std::set<BigInt> elems;
    if (anchor) elems.insert(a);
    for (const auto& ps : w.params.at("polys")) {
        IntPoly p = parse_poly(ps.get<std::string>());
        elems.insert(a + p.eval(d));
    }
    if (auto r = check_elements_match(w, elems); !r.ok) return r;
    return check_colors(w, ctx, elems);
}

ValidationResult validate_schur(const Witness& w, const ValidationContext& ctx, bool mult) {
    BigInt x(w.params.at("x").get<std::string>());
    BigInt y(w.params.at("y").get<std::string>());
    BigInt z = mult ? BigInt(x * y) : BigInt(x + y);
    std::set<BigInt> elems{x, y, z};
    if (auto r = check_elements_match(w, elems); !r.ok) return r;
    return check_colors(w, ctx, elems);
}

ValidationResult validate_exp(const Witness& w, const ValidationContext& ctx) {
    BigInt x(w.params.at("x").get<std::string>());
    BigInt y(w.params.at("y").get<std::string>());
    if (x == y) return fail("exp witness needs x != y");
    if (x < 2 || y < 2) return fail("exp witness needs x, y >= 2");
    std::set<BigInt> elems{x, y, checked_pow(x, y, ctx.bit_cap)};
    if (auto r = check_elements_match(w, elems); !r.ok) return r;
    return check_colors(w, ctx, elems);
}

ValidationResult validate_tower(const Witness& w, const ValidationContext& ctx) {
    std::vector<std::int64_t> xs;
    for (const auto& v : w.params.at("seq")) xs.push_back(std::stoll(v.get<std::string>()));
    std::set<BigInt> elems = exponent_towers(GenSeq(xs), ctx.bit_cap);
    if (auto r = check_elements_match(w, elems); !r.ok) return r;
    return check_colors(w, ctx, elems);
}

ValidationResult validate_sumsub(const Witness& w, const ValidationContext& ctx) {
    if (!ctx.set_a) return fail("sumsub witness needs the target set A in context");
    std::vector<std::int64_t> xv;
    for (const auto& v : w.params.at("x")) xv.push_back(std::stoll(v.get<std::string>()));
    GenSeq x(xv);

    BlockPartition blocks;
    for (const auto& b : w.params.at("blocks")) {
        std::vector<int> bl;
        for (const auto& i : b) bl.push_back(i.get<int>());
        blocks.push_back(std::move(bl));
    }
    if (blocks.empty()) return fail("sumsub witness has no blocks");
    int prev_max = 0;
    std::vector<std::int64_t> yv;
    for (const auto& b : blocks) {
        if (b.empty()) return fail("empty block");
        if (!std::is_sorted(b.begin(), b.end())) return fail("block not sorted");
        if (b.front() <= prev_max) return fail("blocks not ordered: max H_i < min H_{i+1} violated");
        prev_max = b.back();
        BigInt sum = x_alpha(x, b);
        yv.push_back(sum.convert_to<std::int64_t>());
    }
    GenSeq y(yv);

    // fs(y) must sit inside fs(x)
    auto fy = finite_sums(y);
    auto fx = finite_sums(x);
    if (!std::includes(fx.begin(), fx.end(), fy.begin(), fy.end()))
        return fail("FS(y) not contained in FS(x)");

    PolyFamily F;
    for (const auto& ps : w.params.at("family")) F.push_back(parse_poly(ps.get<std::string>()));

    // the displayed inclusion for every N up to the witness length
    std::vector<BigInt> anchors;
    for (const auto& v : w.params.at("anchors")) anchors.emplace_back(v.get<std::string>());
    if (anchors.size() != y.size()) return fail("need one anchor per subsystem length");
    std::set<BigInt> all_values;
    for (std::size_t N = 1; N <= y.size(); ++N) {
        GenSeq yn(std::vector<std::int64_t>(yv.begin(), yv.begin() + std::ptrdiff_t(N)));
        std::set<BigInt> ys = finite_sums(yn);
        auto fp = finite_products(yn);
        ys.insert(fp.begin(), fp.end());
        for (const auto& val : ys) {
            for (const auto& p : F) {
                BigInt e = anchors[N - 1] + p.eval(val);
                if (e < 1 || e > ctx.set_a->window_end() ||
                    !ctx.set_a->contains(e.convert_to<int>()))
                    return fail("a(" + std::to_string(N) + ") + p(" + val.str() + ") = " + e.str() +
                                " not in A");
                if (N == y.size()) all_values.insert(e);
            }
        }
    }
    // FP(y) subset of B when a product-side constraint was recorded
    if (w.params.contains("product_set") && w.params["product_set"].get<bool>()) {
        if (!ctx.set_b) return fail("witness claims an FP constraint but no B in context");
        for (const auto& v : finite_products(y)) {
            if (v > ctx.set_b->window_end() || !ctx.set_b->contains(v.convert_to<int>()))
                return fail("FP value " + v.str() + " not in B");
        }
    }
    return check_elements_match(w, all_values);
}

}  // namespace

ValidationResult validate_witness(const Witness& w, const ValidationContext& ctx) {
    try {
        if (w.kind == "vdw" || w.kind == "poly-config") return validate_poly_config(w, ctx);
        if (w.kind == "schur") return validate_schur(w, ctx, false);
        if (w.kind == "product-schur") return validate_schur(w, ctx, true);
        if (w.kind == "exp") return validate_exp(w, ctx);
        if (w.kind == "tower") return validate_tower(w, ctx);
        if (w.kind == "sumsub") return validate_sumsub(w, ctx);
        return fail("unknown witness kind '" + w.kind + "'");
    } catch (const std::exception& e) {
        return fail(std::string("validation error: ") + e.what());
    }
}

}  // namespace ramsey
