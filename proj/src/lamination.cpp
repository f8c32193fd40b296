#include "artifact/lamination.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace artifact {

namespace {

Int pos(const Int& x) { return x > 0 ? x : Int(0); }
Int neg(const Int& x) { return x < 0 ? x : Int(0); }

void check_coords(const LamCoords& c) {
    if (c.m < 3) throw LamError("puncture count must be >= 3");
    if (static_cast<int>(c.a.size()) != c.m - 2 || static_cast<int>(c.b.size()) != c.m - 2)
        throw LamError("coordinate vector length mismatch");
}

// Crossings of gap line 1 in the taut representative.
Int beta1_of(const LamCoords& c) {
    Int best = 0, pref = 0;
    for (int j = 0; j < c.m - 2; ++j) {
        best = std::max(best, Int(2 * abs(c.a[j]) + 2 * pos(c.b[j]) + 2 * pref));
        pref += c.b[j];
        best = std::max(best, Int(2 * pref));
    }
    return best;
}

// Internal arrays with one phantom pair at each end; the braid action is then
// uniform (every generator acts on an interior pair of pairs).
struct Internal {
    std::vector<Int> A, B;  // length m
};

Internal to_internal(const LamCoords& c) {
    Int B1 = beta1_of(c);
    Int sum_b = 0;
    for (const auto& x : c.b) sum_b += x;
    Internal in;
    in.A.push_back(0);
    in.A.insert(in.A.end(), c.a.begin(), c.a.end());
    in.A.push_back(0);
    in.B.push_back(-B1 / 2);
    in.B.insert(in.B.end(), c.b.begin(), c.b.end());
    in.B.push_back((B1 - 2 * sum_b) / 2);
    return in;
}

LamCoords to_external(int m, const Internal& in) {
    LamCoords c;
    c.m = m;
    c.a.assign(in.A.begin() + 1, in.A.end() - 1);
    c.b.assign(in.B.begin() + 1, in.B.end() - 1);
    return c;
}

// Piecewise-linear update of one adjacent coordinate pair under a half-twist;
// sign +1 is counterclockwise.
void twist_pair(Int& a1, Int& b1, Int& a2, Int& b2, int sign) {
    if (sign > 0) {
        Int d = a1 - a2 + pos(b2) - neg(b1);
        Int na1 = a1 + pos(b1) + pos(pos(b2) - d);
        Int nb1 = b2 - pos(d);
        Int na2 = a2 + neg(b2) + neg(neg(b1) + d);
        Int nb2 = b1 + pos(d);
        a1 = na1; b1 = nb1; a2 = na2; b2 = nb2;
    } else {
        Int cc = a1 - a2 - pos(b2) + neg(b1);
        Int na1 = a1 - pos(b1) - pos(pos(b2) + cc);
        Int nb1 = b2 + neg(cc);
        Int na2 = a2 - neg(b2) - neg(neg(b1) - cc);
        Int nb2 = b1 - neg(cc);
        a1 = na1; b1 = nb1; a2 = na2; b2 = nb2;
    }
}

}  // namespace

LamCoords zero_coords(int m) {
    if (m < 3) throw LamError("puncture count must be >= 3");
    LamCoords c;
    c.m = m;
    c.a.assign(m - 2, 0);
    c.b.assign(m - 2, 0);
    return c;
}

LamCoords sigma_action(const LamCoords& c, int k, int sign) {
    check_coords(c);
    if (k < 1 || k > c.m - 1) throw LamError("generator index out of range");
    if (sign != 1 && sign != -1) throw LamError("sign must be +1 or -1");
    Internal in = to_internal(c);
    twist_pair(in.A[k - 1], in.B[k - 1], in.A[k], in.B[k], sign);
    return to_external(c.m, in);
}

LamCoords act(const LamCoords& c, const std::vector<std::pair<int, int>>& word) {
    LamCoords cur = c;
    for (auto [k, s] : word) cur = sigma_action(cur, k, s);
    return cur;
}

Int norm(const LamCoords& c) {
    check_coords(c);
    Int n = 0;
    for (const auto& x : c.a) n += abs(x);
    for (const auto& x : c.b) n += abs(x);
    return n;
}

Int beta_one(const LamCoords& c) {
    check_coords(c);
    return beta1_of(c);
}

Int total_crossings(const LamCoords& c) {
    check_coords(c);
    // betas of all gap lines, then above+below of every puncture vertical,
    // both determined by the taut position.
    std::vector<Int> bb;
    bb.push_back(0);
    bb.push_back(beta1_of(c));
    for (const auto& x : c.b) bb.push_back(bb.back() - 2 * x);
    bb.push_back(0);
    Int tot = 0;
    for (size_t i = 1; i + 1 < bb.size(); ++i) tot += bb[i];
    for (int j = 1; j <= c.m; ++j) {
        Int bcoef = (bb[j - 1] - bb[j]) / 2;
        Int ab = std::max(Int(bb[j - 1] - 2 * pos(bcoef)), Int(0)) + 2 * abs(bcoef);
        tot += ab;
    }
    return tot;
}

LamCoords round_coords(int m, RoundSpec r) {
    if (m < 3) throw LamError("puncture count must be >= 3");
    if (r.p < 1 || r.q <= r.p || r.q > m) throw LamError("bad round interval");
    LamCoords c = zero_coords(m);
    if (r.p == 1 && r.q == m) return c;  // boundary-parallel: empty class
    auto beta = [&](int i) { return (r.p <= i && i <= r.q - 1) ? 2 : 0; };
    for (int i = 1; i <= m - 2; ++i) c.b[i - 1] = (beta(i) - beta(i + 1)) / 2;
    return c;
}

LamCoords multi_round_coords(int m, const std::vector<RoundSpec>& rs) {
    LamCoords total = zero_coords(m);
    for (size_t i = 0; i < rs.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            const auto &x = rs[i], &y = rs[j];
            bool disjoint = x.q < y.p || y.q < x.p;
            bool nested = (x.p <= y.p && y.q <= x.q) || (y.p <= x.p && x.q <= y.q);
            if (x == y) throw HomotopicComponents("duplicate round interval");
            if (!disjoint && !nested) throw LamError("overlapping non-nested intervals");
        }
        LamCoords r = round_coords(m, rs[i]);
        for (int t = 0; t < m - 2; ++t) {
            total.a[t] += r.a[t];
            total.b[t] += r.b[t];
        }
    }
    return total;
}

LamCoords e_std(int m) {
    std::vector<RoundSpec> rs;
    for (int k = 2; k <= m - 1; ++k) rs.push_back({1, k});
    return multi_round_coords(m, rs);
}

// ---------------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------------

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

struct Crossing {
    int line;
    Rat y;
};

struct RefLine {
    Rat x;
    std::optional<Rat> puncture_y;
};

// Cyclic crossing sequence of one polygon with the reference lines, ordered
// along the traversal. Vertices exactly on a line are handled by sign runs.
std::vector<Crossing> crossing_sequence(const std::vector<Point>& poly,
                                        const std::vector<RefLine>& lines) {
    int n = static_cast<int>(poly.size());
    struct Keyed {
        int edge;
        Rat t;
        Crossing c;
    };
    std::vector<Keyed> keyed;
    for (size_t li = 0; li < lines.size(); ++li) {
        const Rat& cx = lines[li].x;
        std::vector<int> s(n);
        bool all_zero = true;
        for (int i = 0; i < n; ++i) {
            s[i] = sgn(poly[i].x - cx);
            if (s[i]) all_zero = false;
        }
        if (all_zero) throw SelfIntersection("degenerate polygon on a reference line");
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (s[i] != 0 && s[j] != 0 && s[i] != s[j]) {
                Rat t = (cx - poly[i].x) / (poly[j].x - poly[i].x);
                Rat y = poly[i].y + t * (poly[j].y - poly[i].y);
                keyed.push_back({i, t, {static_cast<int>(li), y}});
            }
        }
        // runs of on-line vertices
        for (int i = 0; i < n; ++i) {
            if (s[i] != 0 || s[(i + n - 1) % n] == 0) continue;  // run starts at i
            int k = i;
            while (s[(k + 1) % n] == 0) k = (k + 1) % n;
            int before = s[(i + n - 1) % n], after = s[(k + 1) % n];
            if (before != after)
                keyed.push_back({(i + n - 1) % n, Rat(1), {static_cast<int>(li), poly[i].y}});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& u, const Keyed& v) {
        if (u.edge != v.edge) return u.edge < v.edge;
        return u.t < v.t;
    });
    std::vector<Crossing> out;
    for (auto& k : keyed) out.push_back(k.c);
    return out;
}

// Cancel empty bigons: a pair of crossings adjacent along one component, on
// the same line, adjacent in the y-order of all crossings on that line, with
// no puncture between them, bounds a disk free of punctures and other curves.
void cancel_bigons(std::vector<std::vector<Crossing>>& comps, const std::vector<RefLine>& lines) {
    bool changed = true;
    while (changed) {
        changed = false;
        // sorted index of every crossing on its line
        std::map<int, std::vector<std::tuple<Rat, int, int>>> occ;  // line -> (y, comp, pos)
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (size_t p = 0; p < comps[ci].size(); ++p)
                occ[comps[ci][p].line].emplace_back(comps[ci][p].y, static_cast<int>(ci),
                                                    static_cast<int>(p));
        std::map<std::pair<int, int>, int> rank;  // (comp,pos) -> index in y-order
        for (auto& [li, v] : occ) {
            std::sort(v.begin(), v.end());
            for (size_t idx = 0; idx < v.size(); ++idx)
                rank[{std::get<1>(v[idx]), std::get<2>(v[idx])}] = static_cast<int>(idx);
        }
        for (size_t ci = 0; ci < comps.size() && !changed; ++ci) {
            auto& seq = comps[ci];
            int n = static_cast<int>(seq.size());
            for (int p = 0; p < n; ++p) {
                int q = (p + 1) % n;
                if (n < 2 || seq[p].line != seq[q].line) continue;
                int i1 = rank[{static_cast<int>(ci), p}], i2 = rank[{static_cast<int>(ci), q}];
                if (i1 > i2) std::swap(i1, i2);
                if (i2 - i1 != 1) continue;
                const auto& py = lines[seq[p].line].puncture_y;
                if (py) {
                    Rat lo = std::min(seq[p].y, seq[q].y), hi = std::max(seq[p].y, seq[q].y);
                    if (lo < *py && *py < hi) continue;
                }
                int a = std::max(p, q), b = std::min(p, q);
                seq.erase(seq.begin() + a);
                seq.erase(seq.begin() + b);
                changed = true;
                break;
            }
        }
    }
    std::erase_if(comps, [](const auto& s) { return s.empty(); });
}

LamCoords read_component(int m, const std::vector<Crossing>& seq, const std::vector<RefLine>& lines) {
    LamCoords c = zero_coords(m);
    std::vector<Int> beta(m, 0);  // beta[i] = gap line i (1..m-1)
    std::vector<Int> above(m + 1, 0), below(m + 1, 0);
    for (const auto& cr : seq) {
        if (cr.line % 2 == 1) {
            ++beta[(cr.line + 1) / 2];
        } else {
            int j = cr.line / 2 + 1;  // puncture index
            const Rat& py = *lines[cr.line].puncture_y;
            (cr.y > py ? above[j] : below[j]) += 1;
        }
    }
    for (int j = 2; j <= m - 1; ++j) {
        Int diff = below[j] - above[j];
        if (diff % 2 != 0) throw LamError("trace readout parity failure");
        c.a[j - 2] = diff / 2;
    }
    for (int i = 1; i <= m - 2; ++i) {
        Int diff = beta[i] - beta[i + 1];
        if (diff % 2 != 0) throw LamError("trace readout parity failure");
        c.b[i - 1] = diff / 2;
    }
    // audit: the cancelled position must be taut
    if (beta1_of(c) != beta[1]) throw LamError("trace audit failure: position not taut");
    return c;
}

}  // namespace

LamCoords trace(const std::vector<std::vector<Point>>& polygons,
                const std::vector<Point>& punctures) {
    int m = static_cast<int>(punctures.size());
    if (m < 3) throw LamError("need at least 3 punctures");
    for (int j = 0; j + 1 < m; ++j)
        if (!(punctures[j].x < punctures[j + 1].x))
            throw LamError("punctures must have strictly increasing x");

    for (const auto& poly : polygons) {
        int n = static_cast<int>(poly.size());
        if (n < 3) throw LamError("polygon needs at least 3 vertices");
        for (int i = 0; i < n; ++i)
            if (poly[i] == poly[(i + 1) % n]) throw SelfIntersection("degenerate edge");
    }
    // simplicity within and disjointness between components
    for (size_t pa = 0; pa < polygons.size(); ++pa) {
        const auto& P = polygons[pa];
        int n = static_cast<int>(P.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                const Point &a = P[i], &b = P[(i + 1) % n];
                const Point &c = P[j], &d = P[(j + 1) % n];
                if (adjacent) {
                    // only the shared vertex may be common
                    const Point& shared = (j == i + 1) ? b : a;
                    const Point& afar = (j == i + 1) ? a : b;
                    const Point& cfar = (j == i + 1) ? d : c;
                    if (on_segment(c, d, afar) || on_segment(a, b, cfar))
                        throw SelfIntersection("collinear backtracking edges");
                    (void)shared;
                } else if (segments_intersect(a, b, c, d)) {
                    throw SelfIntersection("polygon self-intersects");
                }
            }
        for (size_t pb = pa + 1; pb < polygons.size(); ++pb) {
            const auto& Q = polygons[pb];
            for (size_t i = 0; i < P.size(); ++i)
                for (size_t j = 0; j < Q.size(); ++j)
                    if (segments_intersect(P[i], P[(i + 1) % P.size()], Q[j],
                                           Q[(j + 1) % Q.size()]))
                        throw SelfIntersection("components intersect");
        }
        for (const auto& pt : punctures)
            for (int i = 0; i < n; ++i)
                if (on_segment(P[i], P[(i + 1) % n], pt))
                    throw PunctureHit("curve passes through a puncture");
    }

    std::vector<RefLine> lines;  // x-ordered: P1,G1,P2,...,G_{m-1},Pm
    for (int j = 0; j < m; ++j) {
        lines.push_back({punctures[j].x, punctures[j].y});
        if (j + 1 < m) lines.push_back({(punctures[j].x + punctures[j + 1].x) / 2, std::nullopt});
    }

    std::vector<std::vector<Crossing>> comps;
    for (const auto& poly : polygons) {
        auto seq = crossing_sequence(poly, lines);
        comps.push_back(std::move(seq));
    }
    cancel_bigons(comps, lines);

    LamCoords total = zero_coords(m);
    std::vector<LamCoords> kept;
    for (const auto& seq : comps) {
        LamCoords c = read_component(m, seq, lines);
        if (norm(c) == 0) continue;  // encloses <= 1 puncture or boundary-parallel
        for (const auto& k : kept)
            if (k == c) throw HomotopicComponents("two components are homotopic");
        kept.push_back(c);
        for (int t = 0; t < m - 2; ++t) {
            total.a[t] += c.a[t];
            total.b[t] += c.b[t];
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// relax
// ---------------------------------------------------------------------------

namespace {
using Key = std::pair<std::vector<Int>, std::vector<Int>>;
Key key_of(const LamCoords& c) { return {c.a, c.b}; }
}  // namespace

RelaxResult relax(const LamCoords& c0, long long budget) {
    check_coords(c0);
    if (norm(c0) == 0) throw NotASingleCurve("coordinates encode the empty multicurve");
    const int m = c0.m;
    std::map<Key, RoundSpec> rounds;
    for (int p = 1; p < m; ++p)
        for (int q = p + 1; q <= m; ++q)
            if (!(p == 1 && q == m)) rounds[key_of(round_coords(m, {p, q}))] = {p, q};

    std::vector<std::pair<int, int>> gens;
    for (int k = 1; k < m; ++k) {
        gens.push_back({k, 1});
        gens.push_back({k, -1});
    }

    LamCoords cur = c0;
    std::vector<std::pair<int, int>> word;
    long long steps = 0;
    while (steps < budget) {
        if (auto it = rounds.find(key_of(cur)); it != rounds.end())
            return {word, it->second};
        Int n0 = total_crossings(cur);
        bool have_best = false;
        Int best_n;
        std::pair<int, int> best_g;
        LamCoords best_c;
        for (auto g : gens) {
            LamCoords nxt = sigma_action(cur, g.first, g.second);
            if (auto it = rounds.find(key_of(nxt)); it != rounds.end()) {
                word.push_back(g);
                return {word, it->second};
            }
            Int n = total_crossings(nxt);
            if (!have_best || n < best_n) {
                have_best = true;
                best_n = n;
                best_g = g;
                best_c = nxt;
            }
        }
        ++steps;
        if (best_n < n0) {
            word.push_back(best_g);
            cur = best_c;
            continue;
        }
        // plateau: breadth-first over equal-potential states, depth <= m
        struct Node {
            LamCoords c;
            std::vector<std::pair<int, int>> w;
        };
        std::vector<Node> frontier{{cur, {}}};
        std::set<Key> seen{key_of(cur)};
        bool found = false;
        Node hit;
        for (int depth = 0; depth < m && !found; ++depth) {
            std::vector<Node> next_frontier;
            for (const auto& node : frontier) {
                for (auto g : gens) {
                    LamCoords nxt = sigma_action(node.c, g.first, g.second);
                    auto w2 = node.w;
                    w2.push_back(g);
                    if (rounds.count(key_of(nxt)) || total_crossings(nxt) < n0) {
                        hit = {nxt, w2};
                        found = true;
                        break;
                    }
                    if (total_crossings(nxt) == n0 && seen.insert(key_of(nxt)).second)
                        next_frontier.push_back({nxt, std::move(w2)});
                }
                if (found) break;
            }
            frontier = std::move(next_frontier);
        }
        if (!found)
            throw BudgetExhausted("relaxation stuck at a plateau", norm(cur));
        word.insert(word.end(), hit.w.begin(), hit.w.end());
        steps += static_cast<long long>(hit.w.size());
        cur = hit.c;
    }
    throw BudgetExhausted("relaxation budget exhausted", norm(cur));
}

// Static bound on norm growth per generator. Writing S for the 1-norm of the
// four updated entries (phantom entries included), every output of twist_pair
// is bounded by 2S, so the updated entries contribute at most 8S. Phantom
// inputs are bounded by 2*norm(c) (beta_1 <= 2*norm and beta_{m-1} <= 4*norm),
// hence S <= 3*norm(c) and norm(result) <= norm(c) + 24*norm(c) <= 2^5 norm(c).
Rat growth_constant(int m) {
    if (m < 3) throw LamError("puncture count must be >= 3");
    return Rat(5);
}

std::string lam_dump(const LamCoords& c) {
    check_coords(c);
    std::ostringstream os;
    os << c.m;
    for (const auto& x : c.a) os << ' ' << x.get_str();
    for (const auto& x : c.b) os << ' ' << x.get_str();
    return os.str();
}

LamCoords lam_parse(const std::string& line) {
    std::istringstream is(line);
    int m;
    if (!(is >> m) || m < 3) throw LamError("bad coordinate dump: puncture count");
    LamCoords c = zero_coords(m);
    std::string tok;
    for (int i = 0; i < 2 * (m - 2); ++i) {
        if (!(is >> tok)) throw LamError("bad coordinate dump: too few entries");
        try {
            Int v(tok);
            (i < m - 2 ? c.a[i] : c.b[i - (m - 2)]) = v;
        } catch (...) {
            throw LamError("bad coordinate dump: not an integer: " + tok);
        }
    }
    if (is >> tok) throw LamError("bad coordinate dump: trailing tokens");
    return c;
}

}  // namespace artifact
