#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/circle_diagram.hpp"
#include "artifact/lamination.hpp"

using namespace artifact;

namespace {

// exact polygon helpers for the geometric invariants
Rat orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

bool on_seg(const Point& a, const Point& b, const Point& p) {
    return orient(a, b, p) == 0 && dot(p - a, p - b) <= 0;
}

bool seg_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rat o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    if (o1 == 0 && on_seg(a, b, c)) return true;
    if (o2 == 0 && on_seg(a, b, d)) return true;
    if (o3 == 0 && on_seg(c, d, a)) return true;
    if (o4 == 0 && on_seg(c, d, b)) return true;
    return false;
}

int count_crossings(const std::vector<Point>& P, const std::vector<Point>& Q) {
    int c = 0;
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < Q.size(); ++j)
            if (seg_cross(P[i], P[(i + 1) % P.size()], Q[j], Q[(j + 1) % Q.size()])) ++c;
    return c;
}

bool inside_poly(const std::vector<Point>& P, const Point& p) {
    int c = 0;
    for (size_t i = 0; i < P.size(); ++i) {
        Point a = P[i], b = P[(i + 1) % P.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rat x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (x > p.x) ++c;
        }
    }
    return c % 2 == 1;
}

bool poly_hits_point(const std::vector<Point>& P, const Point& p) {
    for (size_t i = 0; i < P.size(); ++i)
        if (on_seg(P[i], P[(i + 1) % P.size()], p)) return true;
    return false;
}

bool poly_simple(const std::vector<Point>& P) {
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (seg_cross(P[i], P[(i + 1) % n], P[j], P[(j + 1) % n])) return false;
        }
    return true;
}

SurfaceData checked_surface(const std::string& name, int want_m, int want_sq, int want_faces) {
    SurfaceData s = build_surface(builtin_diagram(name));
    CHECK(s.m == want_m);
    CHECK((int)s.squares.size() == want_sq);
    CHECK(s.bounded_faces == want_faces);
    const CircleDiagram& d = s.diagram;
    for (int k = 0; k + 1 < s.m; ++k) CHECK(s.punctures[k].pos.x < s.punctures[k + 1].pos.x);
    for (size_t i = 0; i < d.circles.size(); ++i) {
        const Circle& c = d.circles[i];
        CHECK(dist2(s.punctures[s.annulus_puncture_index[i][0]].pos, c.center) < c.r * c.r);
        CHECK(dist2(s.punctures[s.annulus_puncture_index[i][1]].pos, c.center) > c.r * c.r);
    }
    // no puncture may sit in an annulus-overlap square (both annuli at once)
    for (const SquareInfo& sq : s.squares)
        for (const Puncture& p : s.punctures) {
            auto within = [&](int ci) {
                const Circle& c = d.circles[ci];
                Rat dd = dist2(p.pos, c.center);
                return dd < (c.r + s.width) * (c.r + s.width) &&
                       dd > (c.r - s.width) * (c.r - s.width);
            };
            CHECK_FALSE((within(sq.i) && within(sq.k)));
        }
    return s;
}

TwistCurveSet checked_curves(const SurfaceData& s) {
    TwistCurveSet t = twist_curves(s);
    for (size_t i = 0; i < s.diagram.circles.size(); ++i) {
        CHECK(poly_simple(t.B[i]));
        CHECK(poly_simple(t.C[i]));
        CHECK(poly_simple(t.D[i]));
        CHECK(count_crossings(t.B[i], t.C[i]) == 2);
        CHECK(count_crossings(t.C[i], t.D[i]) == 0);
        CHECK(count_crossings(t.B[i], t.D[i]) == 0);
        int in_b = 0;
        for (int k = 0; k < s.m; ++k) {
            const Point& p = s.punctures[k].pos;
            CHECK_FALSE(poly_hits_point(t.B[i], p));
            CHECK_FALSE(poly_hits_point(t.C[i], p));
            CHECK_FALSE(poly_hits_point(t.D[i], p));
            if (inside_poly(t.B[i], p)) ++in_b;
            bool in_c = inside_poly(t.C[i], p);
            bool in_d = inside_poly(t.D[i], p);
            if (k == s.annulus_puncture_index[i][0]) {
                CHECK(in_c);
                CHECK_FALSE(in_d);  // push-off leaves exactly the inner puncture behind
            } else {
                CHECK(in_c == in_d);
            }
        }
        CHECK(in_b == 2);
        CHECK(inside_poly(t.B[i], s.punctures[s.annulus_puncture_index[i][0]].pos));
        CHECK(inside_poly(t.B[i], s.punctures[s.annulus_puncture_index[i][1]].pos));
    }
    return t;
}

}  // namespace

TEST_CASE("validate accepts general position and rejects degeneracies") {
    CHECK_NOTHROW(validate(builtin_diagram("crossing_pair")));
    CircleDiagram conc{{{{Rat(0), Rat(0)}, Rat(1, 4)}, {{Rat(0), Rat(0)}, Rat(1, 2)}}};
    CHECK_NOTHROW(validate(conc));
    CHECK(non_incidence_graph(conc).edge_count() == 1);  // nested counts as disjoint

    CircleDiagram tangent{{{{Rat(-1, 4), Rat(0)}, Rat(1, 4)}, {{Rat(1, 4), Rat(0)}, Rat(1, 4)}}};
    CHECK_THROWS_AS(validate(tangent), Tangency);

    // collinear centers sharing the chord (0, +-3/16)
    CircleDiagram triple_collinear{{{{Rat(5, 64), Rat(0)}, Rat(13, 64)},
                                    {{Rat(9, 64), Rat(0)}, Rat(15, 64)},
                                    {{Rat(16, 64), Rat(0)}, Rat(20, 64)}}};
    CHECK_THROWS_AS(validate(triple_collinear), TripleIntersection);

    // three circles through the origin, centers not collinear
    CircleDiagram triple{{{{Rat(1, 8), Rat(0)}, Rat(1, 8)},
                          {{Rat(0), Rat(1, 8)}, Rat(1, 8)},
                          {{Rat(3, 20), Rat(1, 5)}, Rat(1, 4)}}};
    CHECK_THROWS_AS(validate(triple), TripleIntersection);

    CircleDiagram outside{{{{Rat(3, 4), Rat(0)}, Rat(1, 2)}}};
    CHECK_THROWS_AS(validate(outside), OutsideDisk);
}

TEST_CASE("non-incidence graphs of the builtins") {
    CHECK(non_incidence_graph(builtin_diagram("disjoint_pair")).edge_count() == 1);
    CHECK(non_incidence_graph(builtin_diagram("crossing_pair")).edge_count() == 0);
    CHECK(is_isomorphic(non_incidence_graph(builtin_diagram("pentagon_c5")),
                        builtin_graph("cycle_5"))
              .has_value());
}

TEST_CASE("icosahedral candidate: best known rational realization") {
    Graph g = non_incidence_graph(builtin_diagram("icosa"));
    Graph ico = builtin_graph("icosahedron");
    int agree = 0;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (g.has_edge(i, j) == ico.has_edge(i, j)) ++agree;
    CHECK(agree == 60);  // 60 of 66 pairwise relations; see README on this gap
    CHECK_NOTHROW(validate(builtin_diagram("icosa")));
}

TEST_CASE("surfaces and twisting curves of the builtins") {
    SurfaceData ss = checked_surface("single", 3, 0, 1);
    SurfaceData sc = checked_surface("crossing_pair", 7, 2, 3);
    checked_surface("disjoint_pair", 6, 0, 2);
    SurfaceData sp = checked_surface("pentagon_c5", 21, 10, 11);

    TwistCurveSet ts = checked_curves(ss);
    checked_curves(sc);
    checked_curves(sp);

    // face punctures of the crossing pair land in lens, left-only, right-only
    const CircleDiagram& d = sc.diagram;
    int lens = 0, left = 0, right = 0;
    for (int f : sc.face_puncture_index) {
        Point p = sc.punctures[f].pos;
        bool in0 = dist2(p, d.circles[0].center) < d.circles[0].r * d.circles[0].r;
        bool in1 = dist2(p, d.circles[1].center) < d.circles[1].r * d.circles[1].r;
        if (in0 && in1) ++lens;
        else if (in0) ++left;
        else if (in1) ++right;
    }
    CHECK(lens == 1);
    CHECK(left == 1);
    CHECK(right == 1);

    // traced coordinates: B and C essential, D encloses one puncture only
    std::vector<Point> pts;
    for (const auto& p : ss.punctures) pts.push_back(p.pos);
    CHECK(norm(trace({ts.B[0]}, pts)) > 0);
    CHECK(norm(trace({ts.C[0]}, pts)) > 0);
    CHECK(norm(trace({ts.D[0]}, pts)) == 0);
}

TEST_CASE("nested circles get separate face punctures") {
    CircleDiagram conc{{{{Rat(0), Rat(0)}, Rat(1, 4)}, {{Rat(0), Rat(0)}, Rat(1, 2)}}};
    SurfaceData s = build_surface(conc);
    CHECK(s.m == 6);
    CHECK(s.bounded_faces == 2);
    int both = 0, outer_only = 0;
    for (int f : s.face_puncture_index) {
        Point p = s.punctures[f].pos;
        bool in0 = dist2(p, conc.circles[0].center) < conc.circles[0].r * conc.circles[0].r;
        bool in1 = dist2(p, conc.circles[1].center) < conc.circles[1].r * conc.circles[1].r;
        if (in0 && in1) ++both;
        if (!in0 && in1) ++outer_only;
    }
    CHECK(both == 1);
    CHECK(outer_only == 1);
}

TEST_CASE("json round trip") {
    CircleDiagram d = builtin_diagram("pentagon_c5");
    CircleDiagram back = diagram_from_json(diagram_to_json(d));
    REQUIRE(back.circles.size() == d.circles.size());
    for (size_t i = 0; i < d.circles.size(); ++i) {
        CHECK(back.circles[i].center == d.circles[i].center);
        CHECK(back.circles[i].r == d.circles[i].r);
    }
}
