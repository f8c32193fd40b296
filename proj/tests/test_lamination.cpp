#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "artifact/artin.hpp"
#include "artifact/lamination.hpp"

using namespace artifact;

namespace {

LamCoords random_coords(int m, Rng& r) {
    LamCoords c = zero_coords(m);
    for (int i = 0; i < m - 2; ++i) {
        c.a[i] = Int((long)r.below(2000001) - 1000000);
        c.b[i] = Int((long)r.below(2000001) - 1000000);
    }
    return c;
}

Rat F(double x) { return Rat(Int((long)(x * 1000)), Int(1000)); }

}  // namespace

TEST_CASE("generator action: inverses, braid relation, far commutation") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        int m = 3 + int(rng.below(6));
        LamCoords c = random_coords(m, rng);
        int k = 1 + int(rng.below(m - 1));
        int s = rng.below(2) ? 1 : -1;
        CHECK(sigma_action(sigma_action(c, k, s), k, -s) == c);
        if (m >= 4) {
            int kk = 1 + int(rng.below(m - 2));
            CHECK(act(c, {{kk, 1}, {kk + 1, 1}, {kk, 1}}) ==
                  act(c, {{kk + 1, 1}, {kk, 1}, {kk + 1, 1}}));
        }
        if (m >= 5) CHECK(act(c, {{1, 1}, {3, 1}}) == act(c, {{3, 1}, {1, 1}}));
    }
}

TEST_CASE("orientation anchor: counterclockwise half-twist on a round curve") {
    LamCoords x = sigma_action(round_coords(4, {1, 2}), 2, 1);
    CHECK(lam_dump(x) == "4 1 0 0 1");
}

TEST_CASE("full twist fixes nested and disjoint round curves") {
    for (int m = 3; m < 8; ++m)
        for (int p = 1; p < m; ++p)
            for (int q = p + 1; q <= m; ++q) {
                std::vector<std::pair<int, int>> ft;
                for (int rep = 0; rep < q - p + 1; ++rep)
                    for (int i = p; i < q; ++i) ft.push_back({i, 1});
                for (int rp = 1; rp < m; ++rp)
                    for (int rq = rp + 1; rq <= m; ++rq) {
                        bool nested = (p <= rp && rq <= q) || (rp <= p && q <= rq);
                        bool disjoint = rq < p || rp > q;
                        if (!nested && !disjoint) continue;
                        LamCoords c = round_coords(m, {rp, rq});
                        CHECK(act(c, ft) == c);
                    }
            }
}

TEST_CASE("pseudo-Anosov norm growth at the golden-ratio square") {
    LamCoords c = round_coords(3, {1, 2});
    Int prev = 0, cur = 0;
    for (int i = 0; i < 40; ++i) {
        c = act(c, {{1, 1}, {2, -1}});
        prev = cur;
        cur = norm(c);
    }
    double ratio = mpz_get_d(cur.get_mpz_t()) / mpz_get_d(prev.get_mpz_t());
    CHECK(ratio > 2.60);  // (1+phi)^... limit ratio phi^2 ~ 2.618
    CHECK(ratio < 2.64);
}

TEST_CASE("trace reads off exact coordinates of polygonal curves") {
    std::vector<Point> P4;
    for (int i = 1; i <= 4; ++i) P4.push_back({Rat(i), Rat(0)});

    std::vector<Point> r12 = {{F(0.5), F(-0.5)}, {F(2.49), F(-0.5)}, {F(2.49), F(0.5)},
                              {F(0.5), F(0.5)}};
    CHECK(trace({r12}, P4) == round_coords(4, {1, 2}));

    std::vector<Point> wiggly = {{F(0.5), F(-0.5)}, {F(2.49), F(-0.5)}, {F(3.49), F(-0.25)},
                                 {F(3.6), F(0.25)}, {F(2.6), F(0.3)},   {F(2.49), F(0.5)},
                                 {F(0.5), F(0.5)}};
    CHECK(trace({wiggly}, P4) == round_coords(4, {1, 3}));

    // curve around punctures 1 and 3 ducking under puncture 2
    std::vector<Point> c13 = {{F(0.5), F(-0.1)}, {F(0.9), F(0.3)},  {F(1.5), F(0.3)},
                              {F(1.9), F(-0.4)}, {F(2.1), F(-0.4)}, {F(2.52), F(0.3)},
                              {F(3.4), F(0.3)},  {F(3.2), F(-0.6)}, {F(0.7), F(-0.6)}};
    CHECK(lam_dump(trace({c13}, P4)) == "4 1 0 0 1");

    std::vector<Point> r13 = {{F(0.4), F(-0.7)}, {F(3.49), F(-0.7)}, {F(3.49), F(0.7)},
                              {F(0.4), F(0.7)}};
    CHECK(trace({r12, r13}, P4) == multi_round_coords(4, {{1, 2}, {1, 3}}));

    // vertices exactly on the reference lines
    std::vector<Point> onl = {{F(0.6), F(0)}, {F(1.0), F(-0.5)}, {F(2.5), F(-0.5)},
                              {F(2.8), F(0)}, {F(2.5), F(0.5)},  {F(1.0), F(0.5)}};
    CHECK(trace({onl}, P4) == round_coords(4, {1, 2}));

    // components enclosing at most one puncture contribute nothing
    std::vector<Point> tiny = {{F(1.31), F(0.1)}, {F(1.4), F(0.1)}, {F(1.35), F(0.2)}};
    std::vector<Point> one = {{F(0.8), F(-0.2)}, {F(1.2), F(-0.2)}, {F(1.2), F(0.2)},
                              {F(0.8), F(0.2)}};
    CHECK(norm(trace({tiny, one}, P4)) == 0);
}

TEST_CASE("trace rejects degenerate input") {
    std::vector<Point> P4;
    for (int i = 1; i <= 4; ++i) P4.push_back({Rat(i), Rat(0)});
    std::vector<Point> through = {{F(0.5), F(-0.5)}, {F(1.5), F(0.5)}, {F(1.5), F(-0.5)}};
    CHECK_THROWS_AS(trace({through}, P4), PunctureHit);
    std::vector<Point> selfx = {{F(0.4), F(-0.4)}, {F(2.4), F(0.4)}, {F(2.4), F(-0.4)},
                                {F(0.4), F(0.4)}};
    CHECK_THROWS_AS(trace({selfx}, P4), SelfIntersection);
    std::vector<Point> r12 = {{F(0.5), F(-0.5)}, {F(2.49), F(-0.5)}, {F(2.49), F(0.5)},
                              {F(0.5), F(0.5)}};
    std::vector<Point> r12b = {{F(0.45), F(-0.55)}, {F(2.54), F(-0.55)}, {F(2.54), F(0.55)},
                               {F(0.45), F(0.55)}};
    CHECK_THROWS_AS(trace({r12, r12b}, P4), HomotopicComponents);
}

TEST_CASE("relax untangles braided round curves exactly") {
    Rng rng(9);
    int done = 0;
    for (int t = 0; done < 300; ++t) {
        int m = 3 + int(rng.below(7));
        int p = 1 + int(rng.below(m - 1));
        int q = p + 1 + int(rng.below(m - p));
        if (p == 1 && q == m) continue;
        LamCoords c = round_coords(m, {p, q});
        int len = 1 + int(rng.below(20));
        std::vector<std::pair<int, int>> w;
        for (int i = 0; i < len; ++i)
            w.push_back({1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1});
        c = act(c, w);
        RelaxResult r = relax(c, 100000);
        CHECK(act(c, r.conjugator) == round_coords(m, r.target));
        ++done;
    }
}

TEST_CASE("growth constant bounds every observed single-generator step") {
    Rng rng(21);
    Rat kappa = growth_constant(5);
    double worst = 0;
    for (int t = 0; t < 20000; ++t) {
        int m = 3 + int(rng.below(10));
        LamCoords c = random_coords(m, rng);
        Int n0 = norm(c);
        if (n0 == 0) continue;
        Int n1 = norm(sigma_action(c, 1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1));
        worst = std::max(worst,
                         std::log2(mpz_get_d(n1.get_mpz_t()) / mpz_get_d(n0.get_mpz_t())));
    }
    CHECK(worst <= kappa.get_d());
}

TEST_CASE("dump and parse round trip") {
    Rng rng(4);
    LamCoords c = random_coords(6, rng);
    CHECK(lam_parse(lam_dump(c)) == c);
    CHECK(norm(zero_coords(5)) == 0);
    CHECK(norm(e_std(5)) > 0);
}
