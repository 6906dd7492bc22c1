#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/hales_jewett.hpp"
#include "ramsey/reference.hpp"

#include <random>
#include <sstream>

using namespace ramsey;

namespace {

Word word_of(int t, std::vector<int> letters) { return Word{t, std::move(letters)}; }

HjInstance dense_instance(int t, int N, int r, std::vector<std::uint8_t> colors) {
    std::uint64_t points = 1;
    for (int i = 0; i < N; ++i) points *= std::uint64_t(t);
    return HjInstance{t, N, CubePointColoring::dense(points, r, std::move(colors))};
}

}  // namespace

TEST_CASE("substitute") {
    CHECK(substitute(word_of(3, {1, 0, 2, 0}), 3).letters == std::vector<int>{1, 3, 2, 3});
    CHECK(substitute(word_of(1, {0}), 1).letters == std::vector<int>{1});
    CHECK(substitute(word_of(2, {0, 0, 1}), 2).letters == std::vector<int>{2, 2, 1});
    CHECK_THROWS_AS(substitute(word_of(2, {0}), 3), std::invalid_argument);
    CHECK_THROWS_AS(substitute(word_of(2, {1, 2}), 1), std::invalid_argument);
}

TEST_CASE("word printing") {
    CHECK(word_of(2, {0, 1, 2, 0}).to_string() == "v12v");
    CHECK(word_of(2, {1, 2}).is_variable() == false);
}

TEST_CASE("point rank is row-major") {
    CHECK(point_rank(word_of(2, {1, 1})) == 0);
    CHECK(point_rank(word_of(2, {1, 2})) == 1);
    CHECK(point_rank(word_of(2, {2, 1})) == 2);
    CHECK(point_rank(word_of(3, {2, 3})) == 5);
}

TEST_CASE("hj_search examples") {
    // color(11) = color(22) = 0, the rest 1: the diagonal word vv wins
    auto diag = hj_search(dense_instance(2, 2, 2, {0, 1, 1, 0}));
    REQUIRE(diag.has_value());
    CHECK(diag->to_string() == "vv");

    // constant coloring: the lexicographically first variable word
    auto first = hj_search(dense_instance(2, 2, 1, {0, 0, 0, 0}));
    REQUIRE(first.has_value());
    CHECK(first->to_string() == "vv");

    // two points, two colors: the only line {1,2} is bichromatic
    CHECK_FALSE(hj_search(dense_instance(2, 1, 2, {0, 1})).has_value());
}

TEST_CASE("hj_search soundness and reference agreement") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 150; ++iter) {
        int t = 1 + int(rng() % 3);
        int N = 1 + int(rng() % 3);
        int r = 1 + int(rng() % 3);
        std::uint64_t points = 1;
        for (int i = 0; i < N; ++i) points *= std::uint64_t(t);
        std::vector<std::uint8_t> colors(points);
        for (auto& c : colors) c = std::uint8_t(rng() % std::uint64_t(r));
        HjInstance inst = dense_instance(t, N, r, colors);

        auto fast = hj_search(inst);
        auto slow = ref::hj_search(inst);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->letters == slow->letters);
            // the returned line re-checks monochromatic
            int line_color = -1;
            for (int a = 1; a <= t; ++a) {
                Word pt = substitute(*fast, a);
                std::vector<int> coords(pt.letters.begin(), pt.letters.end());
                int c = inst.coloring.color(point_rank(pt), coords);
                if (line_color < 0) line_color = c;
                CHECK(c == line_color);
            }
        }
    }
}

TEST_CASE("hj_search worker determinism") {
    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<std::uint8_t> colors(27);
        for (auto& c : colors) c = std::uint8_t(rng() % 2);
        HjInstance inst = dense_instance(3, 3, 2, colors);
        auto w1 = hj_search(inst, 1);
        auto w2 = hj_search(inst, 2);
        auto w8 = hj_search(inst, 8);
        CHECK(w1.has_value() == w2.has_value());
        CHECK(w1.has_value() == w8.has_value());
        if (w1) {
            CHECK(w1->letters == w2->letters);
            CHECK(w1->letters == w8->letters);
        }
    }
}

TEST_CASE("hj_lines") {
    auto lines = hj_lines(2, 2);
    // vv, v1, v2, 1v, 2v as rank sets
    CHECK(lines.size() == 5);
    for (const auto& l : lines) CHECK(l.size() == 2);
    auto single = hj_lines(1, 2);
    for (const auto& l : single) CHECK(l.size() == 1);
}

TEST_CASE("hj_number pinned values") {
    auto res = hj_number(2, 2, 4);
    REQUIRE(res.status == HjNumberResult::Status::found);
    CHECK(res.N == 2);

    CHECK(hj_number(1, 3, 3).N == 1);  // single color
    CHECK(hj_number(4, 1, 3).N == 1);  // one-letter alphabet: every line is a point

    auto not_found = hj_number(3, 2, 2);  // HJ(3,2) = 4 exceeds the cap
    CHECK(not_found.status == HjNumberResult::Status::not_found);
}

TEST_CASE("hj_number worker determinism") {
    for (int workers : {1, 2, 8}) {
        auto res = hj_number(2, 2, 4, {}, workers);
        CHECK(res.status == HjNumberResult::Status::found);
        CHECK(res.N == 2);
    }
}

TEST_CASE("cube coloring validation") {
    CHECK_THROWS_AS(CubePointColoring::dense(4, 2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(CubePointColoring::dense(4, 2, {0, 1}), std::invalid_argument);
    auto coord = CubePointColoring::coord_rule(4, 2, 1);
    CHECK(coord.color(0, {1, 2}) == 0);
    CHECK(coord.color(3, {2, 2}) == 1);
}
