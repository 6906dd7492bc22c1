#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/config_search.hpp"
#include "ramsey/reference.hpp"

#include <algorithm>
#include <random>

using namespace ramsey;

namespace {

Coloring parity(int n) {
    std::vector<int> assign(std::size_t(n), 0);
    for (int i = 1; i <= n; ++i) assign[std::size_t(i) - 1] = i % 2;
    return Coloring(n, 2, assign);
}

WindowSet full(int n) { return WindowSet::full(n); }

}  // namespace

TEST_CASE("find_poly_config examples") {
    auto w = find_poly_config(parity(9), parse_family("d"), true);
    REQUIRE(w.has_value());
    CHECK(w->params["a"] == "1");
    CHECK(w->params["d"] == "2");
    CHECK(w->elements == std::vector<BigInt>{1, 3});
    CHECK(w->color == 1);

    auto constant = find_poly_config(Coloring::constant(6, 2), parse_family("d;d^2"), true);
    REQUIRE(constant.has_value());
    CHECK(constant->params["a"] == "1");
    CHECK(constant->params["d"] == "1");

    CHECK_FALSE(find_poly_config(Coloring::constant(1, 2), parse_family("d"), true).has_value());
}

TEST_CASE("find_poly_config anchor flag") {
    // without the anchor, {1+d} alone is monochromatic already at d=1
    auto w = find_poly_config(parity(9), parse_family("d"), false);
    REQUIRE(w.has_value());
    CHECK(w->params["a"] == "1");
    CHECK(w->params["d"] == "1");
    CHECK(w->elements == std::vector<BigInt>{2});
}

TEST_CASE("find_poly_config matches the brute-force oracle") {
    std::mt19937_64 rng(61);
    const std::vector<std::string> pool{"d", "2d", "d^2"};
    for (int iter = 0; iter < 400; ++iter) {
        int n = 1 + int(rng() % 12);
        int r = 1 + int(rng() % 2);
        std::vector<int> assign(std::size_t(n), 0);
        for (auto& c : assign) c = int(rng() % std::uint64_t(r));
        Coloring col(n, r, assign);
        PolyFamily F;
        std::uint64_t mask = 1 + rng() % 7;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) F.push_back(parse_poly(pool[i]));
        bool anchor = rng() % 2 == 0;

        auto fast = find_poly_config(col, F, anchor);
        auto slow = ref::find_poly_config(col, F, anchor);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->params["a"].get<std::string>() == std::to_string(slow->first));
            CHECK(fast->params["d"].get<std::string>() == std::to_string(slow->second));
            ValidationContext ctx;
            ctx.coloring = &col;
            auto v = validate_witness(*fast, ctx);
            INFO(v.diagnostic);
            CHECK(v.ok);
        }
    }
}

TEST_CASE("find_poly_config determinism across workers") {
    Coloring col = parity(12);
    PolyFamily F = parse_family("d;d^2");
    auto w1 = find_poly_config(col, F, true, 1);
    auto w2 = find_poly_config(col, F, true, 2);
    auto w8 = find_poly_config(col, F, true, 8);
    REQUIRE(w1.has_value());
    CHECK(w1->to_json() == w2->to_json());
    CHECK(w1->to_json() == w8->to_json());
}

TEST_CASE("find_schur examples") {
    auto add = find_schur(Coloring::constant(5, 2), false);
    REQUIRE(add.has_value());
    CHECK(add->elements == std::vector<BigInt>{1, 2, 3});

    Coloring split(4, 2, {0, 1, 1, 0});  // {1,4} vs {2,3}
    CHECK_FALSE(find_schur(split, false).has_value());

    auto mult = find_schur(Coloring::constant(6, 2), true);
    REQUIRE(mult.has_value());
    CHECK(mult->elements == std::vector<BigInt>{2, 3, 6});
    CHECK(mult->kind == "product-schur");
}

TEST_CASE("find_exp examples") {
    auto constant = find_exp(parse_rule_coloring("const:0"), 4, 4);
    REQUIRE(constant.witness.has_value());
    CHECK(constant.witness->elements == std::vector<BigInt>{2, 3, 8});
    CHECK(constant.witness->params["x"] == "2");
    CHECK(constant.witness->params["y"] == "3");

    // parity: 2 even, 3 odd; the first monochromatic candidate is (2,4)
    auto par = find_exp(parse_rule_coloring("mod:2:0,1"), 6, 6);
    REQUIRE(par.witness.has_value());
    CHECK(par.witness->elements == std::vector<BigInt>{2, 4, 16});

    // small-vs-large split: {2,3,8} all under 5 bits
    auto small = find_exp(parse_rule_coloring("bits:5"), 4, 4);
    REQUIRE(small.witness.has_value());
    CHECK(small.witness->elements == std::vector<BigInt>{2, 3, 8});
    CHECK(small.witness->color == 0);
}

TEST_CASE("find_exp respects the bit cap and reports skips") {
    // under a 4-bit cap only 2^3 and 3^2 are computable, neither line is
    // monochromatic mod 3, and every larger power is skipped
    auto res = find_exp(parse_rule_coloring("mod:3:0,1,2"), 3, 9, /*bit_cap=*/4);
    CHECK_FALSE(res.witness.has_value());
    CHECK(!res.skipped.empty());
}

TEST_CASE("config_set_R") {
    // full window: M(n) = [1..12-n]; pws(1,4) needs a run of 4
    WindowSet R = config_set_R(full(12), parse_family("d"), {1, 4});
    CHECK(R.elements() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});

    CHECK(config_set_R(WindowSet(12), parse_family("d"), {1, 4}).count() == 0);

    WindowSet evens(20);
    for (int i = 2; i <= 20; i += 2) evens.insert(i);
    WindowSet Re = config_set_R(evens, parse_family("d"), {2, 4});
    for (int v : Re.elements()) CHECK(v % 2 == 0);  // parity of m+n must match m
}

TEST_CASE("config_set_R monotone in A, antitone in params") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 6 + int(rng() % 10);
        WindowSet A(n);
        for (int i = 1; i <= n; ++i)
            if (rng() % 2) A.insert(i);
        WindowSet B = A;
        for (int i = 1; i <= n; ++i)
            if (rng() % 3 == 0) B.insert(i);
        PolyFamily F = parse_family("d");
        auto Ra = config_set_R(A, F, {1, 2}).elements();
        auto Rb = config_set_R(B, F, {1, 2}).elements();
        for (int v : Ra) CHECK(std::count(Rb.begin(), Rb.end(), v) == 1);
        // raising L can only remove elements
        auto Rl = config_set_R(A, F, {1, 3}).elements();
        for (int v : Rl) CHECK(std::count(Ra.begin(), Ra.end(), v) == 1);
        // raising g (with L fixed) can only add; equivalently R(g=1) subset of R(g=2)
        auto Rg = config_set_R(A, F, {2, 2}).elements();
        for (int v : Ra) CHECK(std::count(Rg.begin(), Rg.end(), v) == 1);
    }
}

TEST_CASE("verify_ipr_pvdw window regression") {
    auto res = verify_ipr_pvdw(full(12), parse_family("d"), {1, 4}, 3);
    CHECK(res.R.elements() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(res.attempts.size() == 2);
    CHECK(res.attempts[0].result.status == IprStarResult::Status::counterexample);
    CHECK(res.attempts[0].result.counterexample == std::vector<std::int64_t>{9});
    REQUIRE(res.least_r.has_value());
    CHECK(*res.least_r == 2);

    auto none = verify_ipr_pvdw(WindowSet(12), parse_family("d"), {1, 4}, 2);
    CHECK_FALSE(none.least_r.has_value());

    // wider-window regression, frozen from the definition-level oracle
    auto wide = verify_ipr_pvdw(full(20), parse_family("d"), {1, 4}, 3);
    CHECK(wide.R.elements().size() == 16);
    REQUIRE(wide.least_r.has_value());
    CHECK(*wide.least_r == 2);
    CHECK(wide.attempts[0].result.counterexample == std::vector<std::int64_t>{17});
}
