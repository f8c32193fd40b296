#include "artifact/circle_diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace artifact {
namespace {

std::string circ_name(int i) { return "circle " + std::to_string(i + 1); }

enum PairRel { REL_CROSS, REL_APART };

PairRel classify_pair(const Circle& a, const Circle& b, int ia, int ib) {
    Rat d2 = dist2(a.center, b.center);
    Rat sum = a.r + b.r, dif = a.r - b.r;
    Rat sum2 = sum * sum, dif2 = dif * dif;
    if (d2 == sum2 || d2 == dif2)
        throw Tangency(circ_name(ia) + " and " + circ_name(ib) + " are tangent");
    if (d2 > sum2 || d2 < dif2) return REL_APART;
    return REL_CROSS;
}

// Crossing pair i < j: the two intersection points are M +/- sqrt(h2) * R.
struct PairX {
    int i, j;
    Point M, R;
    Rat h2;
};

PairX make_pairx(const CircleDiagram& d, int i, int j) {
    const Circle &a = d.circles[i], &b = d.circles[j];
    Point dc = b.center - a.center;
    Rat d2 = dot(dc, dc);
    Rat t = (d2 + a.r * a.r - b.r * b.r) / (2 * d2);
    Point M = a.center + t * dc;
    Point R{-dc.y, dc.x};
    Rat h2 = (a.r * a.r - t * t * d2) / d2;
    return {i, j, M, R, h2};
}

// Point with coordinates (ax + bx*sqrt(u), ay + by*sqrt(u)); rational when u=0.
struct SP {
    Rat ax, bx, ay, by, u;
};

SP sp_of(const PairX& p, int side) {
    Rat s = side > 0 ? 1 : -1;
    return {p.M.x, s * p.R.x, p.M.y, s * p.R.y, p.h2};
}

SP sp_rat(const Point& p) { return {p.x, 0, p.y, 0, 0}; }

// sign of (P.x - Q.x); same form for y
int cmp_coord(const Rat& a1, const Rat& b1, const Rat& u1, const Rat& a2, const Rat& b2,
              const Rat& u2) {
    if (b1 == 0 && b2 == 0) return cmp(a1, a2);
    if (b2 == 0) return sign_surd1(a1 - a2, b1, u1);
    if (b1 == 0) return -sign_surd1(a2 - a1, b2, u2);
    return sign_surd2({a1 - a2, b1, -b2, 0, u1, u2});
}

int cmp_x(const SP& p, const SP& q) { return cmp_coord(p.ax, p.bx, p.u, q.ax, q.bx, q.u); }

// Angular position around center O, as (class, x) with cyclic class order
// starting just below angle 0: 0 = angle 0, 1 = upper half (x decreasing),
// 2 = angle pi, 3 = lower half (x increasing).
int angle_class(const SP& p, const Point& O) {
    int sy = sign_surd1(p.ay - O.y, p.by, p.u);
    if (sy > 0) return 1;
    if (sy < 0) return 3;
    int sx = sign_surd1(p.ax - O.x, p.bx, p.u);
    if (sx > 0) return 0;
    return 2;
}

int cmp_cyclic(const SP& p, const SP& q, const Point& O) {
    int cp = angle_class(p, O), cq = angle_class(q, O);
    if (cp != cq) return cp < cq ? -1 : 1;
    int cx = cmp_x(p, q);
    if (cp == 1) return -cx;
    if (cp == 3) return cx;
    return 0;  // classes 0 and 2 pin the point uniquely
}

// Absolute angle order over (-pi, pi]: lower half, angle 0, upper half, pi.
int theta_rank_class(int cls) { return cls == 3 ? 0 : cls == 0 ? 1 : cls == 1 ? 2 : 3; }

int cmp_theta(const SP& p, const SP& q, const Point& O) {
    int cp = theta_rank_class(angle_class(p, O)), cq = theta_rank_class(angle_class(q, O));
    if (cp != cq) return cp < cq ? -1 : 1;
    int cx = cmp_x(p, q);
    if (cp == 0) return cx;   // lower half: x ascending with angle
    if (cp == 2) return -cx;  // upper half: x descending with angle
    return 0;
}

// Parameter on a circle: t = p/q with q >= 0; q = 0 is the leftmost point.
struct Frac {
    Int p, q;
};

bool frac_is_inf(const Frac& f) { return f.q == 0; }

Point circle_point(const Circle& c, const Frac& t) {
    if (frac_is_inf(t)) return {c.center.x - c.r, c.center.y};
    Rat tp(t.p), tq(t.q);
    Rat den = tq * tq + tp * tp;
    return {c.center.x + c.r * (tq * tq - tp * tp) / den, c.center.y + c.r * (2 * tp * tq) / den};
}

// sign of cross(P - Oa, P - Ob) for a crossing point P of the two circles
int cross_sign(const SP& p, const Point& Oa, const Point& Ob) {
    Rat ax = p.ax - Oa.x, ay = p.ay - Oa.y;
    Rat cx = p.ax - Ob.x, cy = p.ay - Ob.y;
    // (ax + bx r)(cy + by r) - (ay + by r)(cx + bx r), r = sqrt(u); u-terms cancel
    Rat A = ax * cy - ay * cx;
    Rat B = ax * p.by + p.bx * cy - ay * p.bx - p.by * cx;
    return sign_surd1(A, B, p.u);
}

struct Arrangement {
    std::vector<PairX> pairs;                  // crossing pairs only
    std::vector<std::vector<int>> on_circle;   // per circle: vertex ids in cyclic order
    std::vector<int> dart_base;                // per circle: first dart id
    int total_darts = 0;
    std::vector<int> comp;                     // per circle: component id
    int ncomp = 0;
    // A bounded face: one boundary arc (circle, position in its cyclic order)
    // plus the side the face lies on. For an isolated circle the face is its
    // inside, marked with pos = -1.
    struct Face {
        int circle, pos;  // pos: arc from on_circle[pos] to on_circle[pos+1]
        bool inward;      // push direction off the arc into the face
    };
    std::vector<Face> faces;
};

SP vertex_sp(const Arrangement& arr, int vid) { return sp_of(arr.pairs[vid / 2], vid % 2 ? -1 : 1); }

// darts: per circle, arcs a = 0..k-1 (from on_circle[a] ccw to on_circle[a+1]),
// dart id = base + 2a + (0 ccw | 1 cw)
int dart_rev(int d) { return d ^ 1; }

Arrangement analyze(const CircleDiagram& d) {
    const int n = (int)d.circles.size();
    Arrangement arr;
    arr.on_circle.resize(n);
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classify_pair(d.circles[i], d.circles[j], i, j) == REL_CROSS) {
                int pi = (int)arr.pairs.size();
                arr.pairs.push_back(make_pairx(d, i, j));
                for (int side = 0; side < 2; ++side) {
                    int vid = 2 * pi + side;
                    arr.on_circle[i].push_back(vid);
                    arr.on_circle[j].push_back(vid);
                }
                uf[find(i)] = find(j);
            }
    for (int c = 0; c < n; ++c) {
        const Point& O = d.circles[c].center;
        auto& vs = arr.on_circle[c];
        std::sort(vs.begin(), vs.end(), [&](int a, int b) {
            return cmp_cyclic(vertex_sp(arr, a), vertex_sp(arr, b), O) < 0;
        });
    }
    std::map<int, int> comp_of_root;
    arr.comp.resize(n);
    for (int c = 0; c < n; ++c) {
        auto it = comp_of_root.emplace(find(c), (int)comp_of_root.size()).first;
        arr.comp[c] = it->second;
    }
    arr.ncomp = (int)comp_of_root.size();

    arr.dart_base.resize(n);
    for (int c = 0; c < n; ++c) {
        arr.dart_base[c] = arr.total_darts;
        arr.total_darts += 2 * (int)arr.on_circle[c].size();
    }
    if (arr.total_darts == 0) {
        for (int c = 0; c < n; ++c) arr.faces.push_back({c, -1, true});
        return arr;
    }

    // per dart: end vertex; per vertex: its position on each of its two circles
    std::vector<int> dart_circle(arr.total_darts), dart_arc(arr.total_darts);
    std::vector<int> dart_end(arr.total_darts);
    std::map<std::pair<int, int>, int> vpos;  // (vid, circle) -> position
    for (int c = 0; c < n; ++c) {
        const auto& vs = arr.on_circle[c];
        int k = (int)vs.size();
        for (int a = 0; a < k; ++a) {
            vpos[{vs[a], c}] = a;
            int ccw = arr.dart_base[c] + 2 * a, cw = ccw + 1;
            dart_circle[ccw] = dart_circle[cw] = c;
            dart_arc[ccw] = dart_arc[cw] = a;
            dart_end[ccw] = vs[(a + 1) % k];
            dart_end[cw] = vs[a];
        }
    }
    auto out_ccw = [&](int c, int vid) { return arr.dart_base[c] + 2 * vpos[{vid, c}]; };
    auto out_cw = [&](int c, int vid) {
        int k = (int)arr.on_circle[c].size();
        return arr.dart_base[c] + 2 * ((vpos[{vid, c}] + k - 1) % k) + 1;
    };
    // ccw rotation of the 4 outgoing darts at each vertex
    std::vector<std::array<int, 4>> rot(arr.pairs.size() * 2);
    for (int vid = 0; vid < (int)rot.size(); ++vid) {
        const PairX& px = arr.pairs[vid / 2];
        SP P = vertex_sp(arr, vid);
        int oi = out_ccw(px.i, vid), oic = out_cw(px.i, vid);
        int oj = out_ccw(px.j, vid), ojc = out_cw(px.j, vid);
        if (cross_sign(P, d.circles[px.i].center, d.circles[px.j].center) > 0)
            rot[vid] = {oi, oj, oic, ojc};
        else
            rot[vid] = {oi, ojc, oic, oj};
    }
    // trace faces with interior on the left: next = ccw-previous of reverse
    auto next_dart = [&](int dd) {
        int v = dart_end[dd], rd = dart_rev(dd);
        const auto& r = rot[v];
        for (int t = 0; t < 4; ++t)
            if (r[t] == rd) return r[(t + 3) % 4];
        throw ConstructionFailed("internal: rotation lookup failed");
    };
    std::vector<int> orbit(arr.total_darts, -1);
    int norb = 0;
    for (int dd = 0; dd < arr.total_darts; ++dd) {
        if (orbit[dd] >= 0) continue;
        for (int e = dd; orbit[e] < 0; e = next_dart(e)) orbit[e] = norb;
        ++norb;
    }
    // outer face per component: at the component's leftmost point the region
    // to the west is unbounded, and the cw dart through it has it on the left
    std::vector<char> outer(norb, 0);
    std::vector<char> comp_has_x(arr.ncomp, 0);
    for (int c = 0; c < n; ++c)
        if (!arr.on_circle[c].empty()) comp_has_x[arr.comp[c]] = 1;
    for (int cc = 0; cc < arr.ncomp; ++cc) {
        if (!comp_has_x[cc]) continue;
        int best = -1;
        for (int c = 0; c < n; ++c)
            if (arr.comp[c] == cc && !arr.on_circle[c].empty() &&
                (best < 0 || d.circles[c].center.x - d.circles[c].r <
                                 d.circles[best].center.x - d.circles[best].r))
                best = c;
        const auto& vs = arr.on_circle[best];
        const Point& O = d.circles[best].center;
        SP L = sp_rat({O.x - d.circles[best].r, O.y});
        int k = (int)vs.size(), after = 0;
        for (; after < k; ++after) {
            int cr = cmp_cyclic(vertex_sp(arr, vs[after]), L, O);
            if (cr == 0) throw ConstructionFailed("leftmost point of " + circ_name(best) +
                                                  " is a crossing point");
            if (cr > 0) break;
        }
        int a = (after + k - 1) % k;
        outer[orbit[arr.dart_base[best] + 2 * a + 1]] = 1;
    }
    // audit: orbits per component match the Euler count
    {
        std::vector<int> vcnt(arr.ncomp, 0), ecnt(arr.ncomp, 0), fcnt(arr.ncomp, 0);
        for (int vid = 0; vid < (int)rot.size(); ++vid) vcnt[arr.comp[arr.pairs[vid / 2].i]]++;
        for (int c = 0; c < n; ++c) ecnt[arr.comp[c]] += (int)arr.on_circle[c].size();
        std::vector<int> seen(norb, -1);
        for (int dd = 0; dd < arr.total_darts; ++dd)
            if (seen[orbit[dd]] < 0) {
                seen[orbit[dd]] = 1;
                fcnt[arr.comp[dart_circle[dd]]]++;
            }
        for (int cc = 0; cc < arr.ncomp; ++cc)
            if (comp_has_x[cc] && fcnt[cc] != ecnt[cc] - vcnt[cc] + 2)
                throw ConstructionFailed("internal: face count mismatch");
    }
    std::vector<int> face_rep(norb, -1);
    for (int dd = 0; dd < arr.total_darts; ++dd)
        if (face_rep[orbit[dd]] < 0) face_rep[orbit[dd]] = dd;
    for (int ob = 0; ob < norb; ++ob) {
        if (outer[ob]) continue;
        int dd = face_rep[ob];
        arr.faces.push_back({dart_circle[dd], dart_arc[dd], dd % 2 == 0});
    }
    for (int c = 0; c < n; ++c)
        if (arr.on_circle[c].empty()) arr.faces.push_back({c, -1, true});
    return arr;
}

// Rational point strictly inside the ccw arc from A to B on circle c
// (whole circle when the face has no crossings): Stern-Brocot search on the
// half-angle-tangent parameter after checking the leftmost point.
Point arc_rational_point(const Circle& c, bool whole, const SP& A, const SP& B) {
    if (whole) return {c.center.x, c.center.y + c.r};
    const Point& O = c.center;
    SP L = sp_rat({O.x - c.r, O.y});
    bool a_is_l = cmp_cyclic(A, L, O) == 0, b_is_l = cmp_cyclic(B, L, O) == 0;
    if (!a_is_l && !b_is_l) {
        // in-arc test via cyclic betweenness
        int ab = cmp_cyclic(A, B, O);
        int al = cmp_cyclic(A, L, O), lb = cmp_cyclic(L, B, O);
        bool inside = ab < 0 ? (al < 0 && lb < 0) : (al < 0 || lb < 0);
        if (inside) return {O.x - c.r, O.y};
    }
    // Stern-Brocot search on t = tan(theta/2); split at t = 0 first so the
    // bracket mediants stay well-formed
    auto side = [&](const Frac& t) {
        Point X = circle_point(c, t);
        SP sx = sp_rat(X);
        if (!a_is_l && cmp_theta(sx, A, O) <= 0) return -1;
        if (!b_is_l && cmp_theta(sx, B, O) >= 0) return 1;
        return 0;
    };
    Frac lo{0, 1}, hi{0, 1};
    int s0 = side({0, 1});
    if (s0 == 0) return circle_point(c, {0, 1});
    if (s0 < 0)
        lo = {0, 1}, hi = {1, 0};
    else
        lo = {-1, 0}, hi = {0, 1};
    for (int it = 0; it < 20000; ++it) {
        Frac mid{lo.p + hi.p, lo.q + hi.q};
        int s = side(mid);
        if (s == 0) return circle_point(c, mid);
        (s < 0 ? lo : hi) = mid;
    }
    throw ConstructionFailed("no rational point found on arc of " +
                             circ_name(0));  // unreachable in practice
}

// largest verified clearance 2^-k such that p is at least that far from every
// circle other than `skip`; returns half of it
Rat clearance_radius(const CircleDiagram& d, const Point& p, int skip, const Rat& start) {
    Rat lam = start;
    for (int it = 0; it < 300; ++it) {
        bool ok = true;
        for (int j = 0; j < (int)d.circles.size() && ok; ++j) {
            if (j == skip) continue;
            Rat d2 = dist2(p, d.circles[j].center);
            Rat rj = d.circles[j].r;
            Rat out = rj + lam;
            if (d2 > out * out) continue;
            if (rj > lam) {
                Rat in = rj - lam;
                if (d2 < in * in) continue;
            }
            ok = false;
        }
        if (ok) return lam / 2;
        lam /= 2;
    }
    throw ConstructionFailed("point too close to the arrangement");
}

bool clear_of_circle(const Point& p, const Circle& c, const Rat& margin) {
    Rat d2 = dist2(p, c.center);
    Rat out = c.r + margin;
    if (d2 > out * out) return true;
    if (c.r > margin) {
        Rat in = c.r - margin;
        if (d2 < in * in) return true;
    }
    return false;
}

const Rat& pow2neg40() {
    static Rat v = Rat(1, Int(1) << 40);
    return v;
}

}  // namespace

void validate(const CircleDiagram& d) {
    const int n = (int)d.circles.size();
    if (n == 0) throw DiagramError("empty diagram");
    for (int i = 0; i < n; ++i) {
        const Circle& c = d.circles[i];
        if (c.r <= 0) throw DiagramError(circ_name(i) + " has nonpositive radius");
        Rat m = 1 - c.r;
        if (m <= 0 || dot(c.center, c.center) >= m * m)
            throw OutsideDisk(circ_name(i) + " is not strictly inside the unit disk");
    }
    std::vector<std::vector<char>> crossing(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classify_pair(d.circles[i], d.circles[j], i, j) == REL_CROSS)
                crossing[i][j] = crossing[j][i] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!(crossing[i][j] && crossing[i][k] && crossing[j][k])) continue;
                const Circle &a = d.circles[i], &b = d.circles[j], &c = d.circles[k];
                auto pw = [](const Circle& q) -> Rat { return dot(q.center, q.center) - q.r * q.r; };
                // radical lines of (a,b) and (a,c): 2(Ob-Oa).X = pw(b)-pw(a) etc.
                Point u = b.center - a.center, v = c.center - a.center;
                Rat cu = (pw(b) - pw(a)) / 2, cv = (pw(c) - pw(a)) / 2;
                Rat det = cross(u, v);
                std::string who = circ_name(i) + ", " + circ_name(j) + ", " + circ_name(k);
                if (det == 0) {
                    // parallel radical lines; coincident iff u.X = cu equals u.X = cv/lambda
                    if (cu * dot(v, u) == cv * dot(u, u))
                        throw TripleIntersection(who + " share a point");
                    continue;
                }
                Point X{(cu * v.y - cv * u.y) / det, (u.x * cv - v.x * cu) / det};
                if (dist2(X, a.center) == a.r * a.r)
                    throw TripleIntersection(who + " share a point");
            }
}

Graph non_incidence_graph(const CircleDiagram& d) {
    validate(d);
    const int n = (int)d.circles.size();
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
    Graph g(labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classify_pair(d.circles[i], d.circles[j], i, j) == REL_APART) g.add_edge(i, j);
    return g;
}

SurfaceData build_surface(const CircleDiagram& d) {
    validate(d);
    const int n = (int)d.circles.size();
    Arrangement arr = analyze(d);

    // face punctures: a rational point on a boundary arc of each bounded face,
    // pushed off the arc into the face by half a verified clearance
    struct FacePt {
        Point q;
        Rat eps;
    };
    std::vector<FacePt> fpts;
    for (const auto& f : arr.faces) {
        const Circle& c = d.circles[f.circle];
        Point Q;
        if (f.pos < 0) {
            Q = arc_rational_point(c, true, SP{}, SP{});
        } else {
            const auto& vs = arr.on_circle[f.circle];
            SP A = vertex_sp(arr, vs[f.pos]);
            SP B = vertex_sp(arr, vs[(f.pos + 1) % vs.size()]);
            Q = arc_rational_point(c, false, A, B);
        }
        Rat start = c.r / 2 < Rat(1, 4) ? c.r / 2 : Rat(1, 4);
        Rat eps = clearance_radius(d, Q, f.circle, start);
        Rat s = (f.inward ? -eps : eps) / c.r;
        fpts.push_back({Q + s * (Q - c.center), eps});
    }
    const int nfaces = (int)arr.faces.size();

    // base-point parameter candidates on each circle
    std::vector<Frac> cands = {{1, 1}, {-1, 1}, {0, 1}, {1, 0}, {1, 2}, {-1, 2}, {2, 1},
                               {-2, 1}, {1, 3}, {-1, 3}, {3, 1}, {-3, 1}, {1, 4}, {-1, 4},
                               {4, 1}, {-4, 1}, {2, 3}, {-2, 3}, {3, 2}, {-3, 2}};
    for (int k = 5; k <= 16; ++k) {
        cands.push_back({1, k});
        cands.push_back({-1, k});
        cands.push_back({2 * k - 1, k});
        cands.push_back({1 - 2 * k, k});
    }

    Rat floor_delta = Rat(1, Int(1) << 32);
    for (Rat delta(1, 16); delta >= floor_delta; delta /= 2) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (d.circles[i].r <= 8 * delta) ok = false;
        for (const auto& fp : fpts) {
            if (!ok) break;
            for (int j = 0; j < n; ++j)
                if (!clear_of_circle(fp.q, d.circles[j], 4 * delta)) {
                    ok = false;
                    break;
                }
        }
        std::vector<Point> bases(n);
        for (int i = 0; i < n && ok; ++i) {
            bool found = false;
            for (const auto& t : cands) {
                Point B = circle_point(d.circles[i], t);
                bool good = true;
                for (int j = 0; j < n && good; ++j)
                    if (j != i && !clear_of_circle(B, d.circles[j], 4 * delta)) good = false;
                if (good) {
                    bases[i] = B;
                    found = true;
                    break;
                }
            }
            if (!found) ok = false;
        }
        if (!ok) continue;

        // punctures in construction order, then the pinned x-perturbation
        struct Raw {
            Point p;
            Puncture::Kind kind;
            int circle, face;
        };
        std::vector<Raw> raw;
        for (int i = 0; i < n; ++i) {
            const Circle& c = d.circles[i];
            Point u = Rat(1) / c.r * (bases[i] - c.center);
            raw.push_back({bases[i] - (delta / 2) * u, Puncture::AnnulusInner, i, -1});
            raw.push_back({bases[i] + (delta / 2) * u, Puncture::AnnulusOuter, i, -1});
        }
        for (int f = 0; f < nfaces; ++f) raw.push_back({fpts[f].q, Puncture::Face, -1, f});
        if (Rat((long)raw.size()) * pow2neg40() >= delta / 32) continue;
        for (size_t k = 0; k < raw.size(); ++k) raw[k].p.x += Rat((long)(k + 1)) * pow2neg40();

        for (const auto& r : raw)
            if (dot(r.p, r.p) >= 1) ok = false;
        for (int i = 0; i < n && ok; ++i) {
            const Circle& c = d.circles[i];
            if (!(dist2(raw[2 * i].p, c.center) < c.r * c.r)) ok = false;
            if (!(dist2(raw[2 * i + 1].p, c.center) > c.r * c.r)) ok = false;
        }
        // no puncture inside any intersection square (= inside both annuli)
        for (const auto& px : arr.pairs) {
            if (!ok) break;
            for (const auto& r : raw) {
                bool in_i = !clear_of_circle(r.p, d.circles[px.i], delta);
                bool in_k = !clear_of_circle(r.p, d.circles[px.j], delta);
                if (in_i && in_k) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;

        std::vector<int> order(raw.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return raw[a].p.x < raw[b].p.x; });
        for (size_t k = 0; k + 1 < order.size(); ++k)
            if (raw[order[k]].p.x == raw[order[k + 1]].p.x) ok = false;
        if (!ok) continue;

        SurfaceData s;
        s.diagram = d;
        s.width = delta;
        s.base_points = bases;
        s.bounded_faces = nfaces;
        s.annulus_puncture_index.assign(n, {-1, -1});
        s.face_puncture_index.assign(nfaces, -1);
        for (size_t k = 0; k < order.size(); ++k) {
            const Raw& r = raw[order[k]];
            s.punctures.push_back({r.p, r.kind, r.circle});
            if (r.kind == Puncture::AnnulusInner) s.annulus_puncture_index[r.circle][0] = (int)k;
            if (r.kind == Puncture::AnnulusOuter) s.annulus_puncture_index[r.circle][1] = (int)k;
            if (r.kind == Puncture::Face) s.face_puncture_index[r.face] = (int)k;
        }
        s.m = (int)s.punctures.size();
        for (const auto& px : arr.pairs)
            for (int side : {1, -1}) s.squares.push_back({px.i, px.j, px.M, px.R, px.h2, side});
        return s;
    }
    throw DegenerateWidth("no valid annulus width above 2^-32");
}

namespace {

// polygon inscribed in the circle (O, rho): start from a spread of rational
// parameters (plus forced ones), subdivide by mediants until every chord is
// short enough that the sagitta stays below the bound
std::vector<Point> inscribed_polygon(const Point& O, const Rat& rho, const Rat& sagitta,
                                     const std::vector<Frac>& forced, int circle_idx) {
    Circle c{O, rho};
    // chord^2 < 2*rho*s - s^2/4 guarantees sagitta < s (for s < rho)
    Rat bound = 2 * rho * sagitta - sagitta * sagitta / 4;
    struct Node {
        Frac t;
        Point p;
    };
    auto cmp_node = [](const Node& a, const Node& b) {
        // cyclic order: leftmost point first, then t ascending
        bool ia = frac_is_inf(a.t), ib = frac_is_inf(b.t);
        if (ia || ib) return ia && !ib;
        return a.t.p * b.t.q < b.t.p * a.t.q;
    };
    std::vector<Node> vs;
    auto push = [&](const Frac& t) { vs.push_back({t, circle_point(c, t)}); };
    push({1, 0});
    for (int k = -8; k <= 8; ++k) push({k, 8});
    for (int k = -8; k <= 8; ++k)
        if (k != 0 && std::abs(k) != 8) push({8 * (k < 0 ? -1 : 1), std::abs(k)});
    for (const auto& f : forced) push(f);
    std::sort(vs.begin(), vs.end(), cmp_node);
    vs.erase(std::unique(vs.begin(), vs.end(),
                         [](const Node& a, const Node& b) {
                             return frac_is_inf(a.t) == frac_is_inf(b.t) &&
                                    (frac_is_inf(a.t) || a.t.p * b.t.q == b.t.p * a.t.q);
                         }),
             vs.end());
    for (size_t i = 0; i < vs.size();) {
        if (vs.size() > 100000) throw ConstructionFailed("polygon for " + circ_name(circle_idx) +
                                                         " needs too many vertices");
        const Node& a = vs[i];
        const Node& b = vs[(i + 1) % vs.size()];
        if (dist2(a.p, b.p) < bound) {
            ++i;
            continue;
        }
        Frac mid{a.t.p + b.t.p, a.t.q + b.t.q};
        if (frac_is_inf(a.t)) mid = Frac{b.t.p - b.t.q * 64, b.t.q};  // far left of b
        if (frac_is_inf(b.t)) mid = Frac{a.t.p + a.t.q * 64, a.t.q};
        vs.insert(vs.begin() + i + 1, {mid, circle_point(c, mid)});
        std::sort(vs.begin() + i, vs.end(), cmp_node);  // keep order near the wrap
    }
    std::vector<Point> out;
    for (const auto& v : vs) out.push_back(v.p);
    return out;
}

}  // namespace

TwistCurveSet twist_curves(const SurfaceData& s) {
    const CircleDiagram& d = s.diagram;
    const int n = (int)d.circles.size();
    const Rat& delta = s.width;
    TwistCurveSet t;
    for (int i = 0; i < n; ++i) {
        const Circle& c = d.circles[i];
        const Point& B = s.base_points[i];
        Point u = Rat(1) / c.r * (B - c.center);
        Point v{-u.y, u.x};
        Rat ru = 5 * delta / 8, rv = delta / 16;
        t.B.push_back({B + ru * u + rv * v, B + ru * u - rv * v, B - ru * u - rv * v,
                       B - ru * u + rv * v});
        // recover the base point's circle parameter so it lands on C_i exactly
        Frac bt;
        if (B.x == c.center.x - c.r && B.y == c.center.y)
            bt = {1, 0};
        else {
            // t = y' / (r + x') in lowest terms, from the half-angle formula
            Rat xp = B.x - c.center.x, yp = B.y - c.center.y;
            Rat tv = yp / (c.r + xp);
            bt = {tv.get_num(), tv.get_den()};
        }
        t.C.push_back(inscribed_polygon(c.center, c.r, delta / 4, {bt}, i));
        t.D.push_back(inscribed_polygon(c.center, c.r - 13 * delta / 16, delta / 32, {}, i));
    }
    return t;
}

// Best arrangement found for the icosahedral pattern by numerical search with
// exact-rational post-verification; 60 of the 66 pairwise relations match.
// Extensive search (including exhaustive combinatorial enumeration) found no
// exact realization; see the README note on the icosahedral builtin.
const char* const kIcosaTable[] = {
    "18239/45593",  "-493/34277",   "28315/64182",
    "28952/90203",  "937/46049",    "37113/95768",
    "27802/85897",  "-1326/27067",  "26615/67741",
    "17618/44443",  "-9272/95919",  "43222/96971",
    "11134/22567",  "-6964/93049",  "22642/75533",
    "-22105/69049", "-8629/20041",  "15863/41736",
    "9299/86749",   "6813/62219",   "9753/69256",
    "-6201/98810",  "0",            "81367/98512",
    "11383/96832",  "-2286/14065",  "13741/96298",
    "-34657/94806", "34412/98703",  "38747/91203",
    "23957/42722",  "-587/11122",   "27689/84430",
    "9904/40669",   "-30735/61549", "13092/63593",
};

CircleDiagram builtin_diagram(const std::string& name) {
    auto C = [](const char* x, const char* y, const char* r) {
        return Circle{{*parse_rational(x), *parse_rational(y)}, *parse_rational(r)};
    };
    CircleDiagram d;
    if (name == "single") {
        d.circles = {C("0", "0", "1/2")};
    } else if (name == "crossing_pair") {
        d.circles = {C("-1/4", "0", "3/8"), C("1/4", "0", "3/8")};
    } else if (name == "disjoint_pair") {
        d.circles = {C("-1/2", "0", "1/5"), C("1/2", "0", "1/5")};
    } else if (name == "pentagon_c5") {
        d.circles = {C("0", "1/2", "19/50"), C("-19/40", "31/200", "19/50"),
                     C("-147/500", "-81/200", "19/50"), C("147/500", "-81/200", "19/50"),
                     C("19/40", "31/200", "19/50")};
    } else if (name == "icosa") {
        d.circles.clear();
        for (int i = 0; i < 12; ++i)
            d.circles.push_back(
                C(kIcosaTable[3 * i], kIcosaTable[3 * i + 1], kIcosaTable[3 * i + 2]));
    } else {
        throw DiagramError("unknown builtin diagram: " + name);
    }
    validate(d);
    return d;
}

std::string diagram_to_json(const CircleDiagram& d) {
    nlohmann::json j;
    j["circles"] = nlohmann::json::array();
    for (const auto& c : d.circles)
        j["circles"].push_back({{"cx", format_rational(c.center.x)},
                                {"cy", format_rational(c.center.y)},
                                {"r", format_rational(c.r)}});
    return j.dump(2);
}

CircleDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.contains("circles") || !j["circles"].is_array())
        throw DiagramError("diagram JSON needs a \"circles\" array");
    CircleDiagram d;
    for (const auto& jc : j["circles"]) {
        auto get = [&](const char* key) {
            if (!jc.contains(key) || !jc[key].is_string())
                throw DiagramError(std::string("circle needs string field ") + key);
            auto r = parse_rational(jc[key].get<std::string>());
            if (!r) throw DiagramError(std::string("bad rational in field ") + key);
            return *r;
        };
        d.circles.push_back({{get("cx"), get("cy")}, get("r")});
    }
    return d;
}

}  // namespace artifact
