#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/config_search.hpp"
#include "ramsey/witness.hpp"

using namespace ramsey;

namespace {

Witness poly_witness() {
    Coloring c(9, 2, {0, 1, 0, 1, 0, 1, 0, 1, 0});
    auto w = find_poly_config(c, parse_family("d"), true);
    REQUIRE(w.has_value());
    return *w;
}

}  // namespace

TEST_CASE("witness json round trip") {
    Witness w = poly_witness();
    auto j = w.to_json();
    CHECK(j["schema"] == 1);
    Witness back = Witness::from_json(j);
    CHECK(back.to_json() == j);
}

TEST_CASE("validate accepts engine output") {
    Coloring c(9, 2, {0, 1, 0, 1, 0, 1, 0, 1, 0});
    Witness w = poly_witness();
    ValidationContext ctx;
    ctx.coloring = &c;
    auto res = validate_witness(w, ctx);
    INFO(res.diagnostic);
    CHECK(res.ok);
}

TEST_CASE("tampered element is caught") {
    Coloring c(9, 2, {0, 1, 0, 1, 0, 1, 0, 1, 0});
    ValidationContext ctx;
    ctx.coloring = &c;

    Witness w = poly_witness();
    w.elements.back() += 2;  // {1,3} -> {1,5}: still monochromatic, wrong pattern
    CHECK_FALSE(validate_witness(w, ctx).ok);

    Witness w2 = poly_witness();
    w2.color = 1 - w2.color;
    CHECK_FALSE(validate_witness(w2, ctx).ok);

    Witness w3 = poly_witness();
    w3.params["d"] = "3";
    CHECK_FALSE(validate_witness(w3, ctx).ok);
}

TEST_CASE("wrong coloring is caught") {
    Witness w = poly_witness();
    Coloring other(9, 2, {0, 0, 1, 1, 0, 0, 1, 1, 0});
    ValidationContext ctx;
    ctx.coloring = &other;
    CHECK_FALSE(validate_witness(w, ctx).ok);
}

TEST_CASE("out-of-window witness is caught") {
    Witness w = poly_witness();
    Coloring narrow(2, 2, {0, 1});
    ValidationContext ctx;
    ctx.coloring = &narrow;
    auto res = validate_witness(w, ctx);
    CHECK_FALSE(res.ok);
    CHECK(!res.diagnostic.empty());
}

TEST_CASE("schur and exp witnesses validate") {
    Coloring c = Coloring::constant(6, 2);
    auto ws = find_schur(c, false);
    REQUIRE(ws.has_value());
    ValidationContext ctx;
    ctx.coloring = &c;
    CHECK(validate_witness(*ws, ctx).ok);

    auto rule = parse_rule_coloring("const:0");
    auto we = find_exp(rule, 4, 4);
    REQUIRE(we.witness.has_value());
    ValidationContext rctx;
    rctx.rule = &rule;
    CHECK(validate_witness(*we.witness, rctx).ok);

    // unrelated context: no coloring at all
    ValidationContext empty;
    CHECK_FALSE(validate_witness(*ws, empty).ok);
}

TEST_CASE("tower witness validates against its rule") {
    auto rule = parse_rule_coloring("mod:2:0,1");
    Witness w;
    w.kind = "tower";
    w.colors = 2;
    w.color = 0;
    w.params["seq"] = nlohmann::ordered_json::array({"2", "4"});
    auto fep = exponent_towers(GenSeq({2, 4}));
    w.elements.assign(fep.begin(), fep.end());
    ValidationContext ctx;
    ctx.rule = &rule;
    CHECK(validate_witness(w, ctx).ok);

    w.color = 1;
    CHECK_FALSE(validate_witness(w, ctx).ok);
}

TEST_CASE("unknown kind is rejected") {
    Witness w;
    w.kind = "mystery";
    ValidationContext ctx;
    CHECK_FALSE(validate_witness(w, ctx).ok);
}
