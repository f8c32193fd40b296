#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/artin.hpp"
#include "artifact/braid.hpp"

using namespace artifact;

TEST_CASE("equal_braids separates and identifies correctly") {
    CHECK(equal_braids(make_braid(3, {{1, 1}, {2, 1}, {1, 1}}),
                       make_braid(3, {{2, 1}, {1, 1}, {2, 1}})));
    CHECK_FALSE(equal_braids(make_braid(3, {{1, 1}}), make_braid(3, {{2, 1}})));
    // central element: distinguishable from identity only by exponent sum
    BraidWord d2 = full_twist_word(3, {1, 3});
    CHECK_FALSE(equal_braids(d2, make_braid(3, {})));
    CHECK(equal_braids(compose(d2, inverse_braid(d2)), make_braid(3, {})));
}

TEST_CASE("full twist is central") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        int m = 3 + int(rng.below(3));
        std::vector<std::pair<int, int>> ls;
        for (int i = 0; i < 6; ++i)
            ls.push_back({1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1});
        BraidWord w = make_braid(m, ls);
        BraidWord d2 = full_twist_word(m, {1, m});
        CHECK(equal_braids(compose(w, d2), compose(d2, w)));
    }
}

TEST_CASE("permutation image and exponent sum") {
    auto p = braid_permutation(make_braid(3, {{1, 1}}));
    CHECK(p == std::vector<int>{2, 1, 3});
    for (int m = 2; m < 6; ++m)
        CHECK(exponent_sum(full_twist_word(m, {1, m})) == (long long)m * (m - 1));
    CHECK(exponent_sum(make_braid(3, {{1, 1}, {2, -1}})) == 0);
}

TEST_CASE("twist along a round curve") {
    LamCoords c = round_coords(4, {1, 2});
    BraidWord t = dehn_twist_word(c, 1);
    CHECK(equal_braids(t, make_braid(4, {{1, 1}, {1, 1}})));
    CHECK(braid_act(t, c) == c);
    CHECK(equal_braids(compose(t, dehn_twist_word(c, -1)), make_braid(4, {})));
}

TEST_CASE("twist along tangled curves is pure and fixes the curve") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        int m = 3 + int(rng.below(5));
        int p = 1 + int(rng.below(m - 1)), q = p + 1 + int(rng.below(m - p));
        if (p == 1 && q == m) continue;
        LamCoords c = round_coords(m, {p, q});
        std::vector<std::pair<int, int>> wl;
        for (int i = 0; i < 10; ++i)
            wl.push_back({1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1});
        c = act(c, wl);
        BraidWord tw = dehn_twist_word(c, 1);
        CHECK(braid_act(tw, c) == c);
        auto perm = braid_permutation(tw);
        for (int i = 0; i < m; ++i) CHECK(perm[i] == i + 1);
    }
}

TEST_CASE("free reduction and composition") {
    BraidWord w = free_reduce(make_braid(3, {{1, 1}, {1, -1}, {2, 1}}));
    CHECK(w.letters == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(inverse_braid(make_braid(3, {{1, 1}, {2, -1}})).letters ==
          std::vector<std::pair<int, int>>{{2, 1}, {1, -1}});
}

TEST_CASE("text round trip") {
    BraidWord w = make_braid(5, {{3, 1}, {1, -1}, {4, 1}});
    CHECK(braid_from_text(5, braid_to_text(w)) == w);
    CHECK(braid_to_text(w) == "s3 s1^-1 s4");
    CHECK_THROWS_AS(make_braid(3, {{7, 1}}), BraidError);
}
