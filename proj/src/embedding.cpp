#include "artifact/embedding.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace artifact {
namespace {

// Global twist orientation: the point-push tau_D^2 tau_C^-2 must wind
// anticlockwise for complexity to grow; +1 matches our sigma sign convention
// (audited by the growth tests).
constexpr int kTwistOrientation = 1;

BraidWord twist_word_from(const LamCoords& c, const std::vector<std::pair<int, int>>& conj,
                          const RoundSpec& target, int direction) {
    BraidWord cw{c.m, conj};
    BraidWord ft = full_twist_word(c.m, target);
    if (direction < 0) ft = inverse_braid(ft);
    return free_reduce(compose(compose(cw, ft), inverse_braid(cw)));
}

}  // namespace

EmbeddingSpec build_embedding(const CircleDiagram& d, long long budget) {
    EmbeddingSpec e;
    e.graph = non_incidence_graph(d);
    e.diagram = d;
    e.surface = build_surface(d);
    e.curves = twist_curves(e.surface);
    e.m = e.surface.m;
    std::vector<Point> pts;
    for (const auto& p : e.surface.punctures) pts.push_back(p.pos);

    const int n = (int)d.circles.size();
    for (int i = 0; i < n; ++i) {
        std::array<const std::vector<Point>*, 3> polys = {&e.curves.B[i], &e.curves.C[i],
                                                          &e.curves.D[i]};
        std::array<BraidWord, 3> w;  // positive twists along B, C, D
        e.conjugators.push_back({});
        for (int k = 0; k < 3; ++k) {
            LamCoords c = trace({*polys[k]}, pts);
            if (norm(c) == 0) {
                w[k] = BraidWord{e.m, {}};  // curve encloses <= 1 puncture: trivial twist
                continue;
            }
            RelaxResult rx = relax(c, budget);
            e.conjugators.back()[k] = rx.conjugator;
            w[k] = twist_word_from(c, rx.conjugator, rx.target, kTwistOrientation);
        }
        // f_i = tau_B tau_D^2 tau_C^-2 tau_B, rightmost factor applied first,
        // leftmost word letter applied first
        BraidWord ci = inverse_braid(w[1]);
        BraidWord f = compose(w[0], compose(ci, compose(ci, compose(w[2], compose(w[2], w[0])))));
        e.gen_words.push_back(free_reduce(f));
    }

    for (int i = 0; i < n; ++i) {
        auto perm = braid_permutation(e.gen_words[i]);
        for (int k = 0; k < e.m; ++k)
            if (perm[k] != k + 1)
                throw EmbeddingError("generator braid " + std::to_string(i + 1) +
                                     " is not a pure braid");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool commutes = equal_braids(compose(e.gen_words[i], e.gen_words[j]),
                                         compose(e.gen_words[j], e.gen_words[i]));
            if (commutes != e.graph.has_edge(i, j))
                throw RelationFailure("generators " + std::to_string(i + 1) + " and " +
                                          std::to_string(j + 1) +
                                          (commutes ? " commute unexpectedly"
                                                    : " fail to commute"),
                                      i, j);
        }
    return e;
}

BraidWord apply(const EmbeddingSpec& e, const ArtinWord& w) {
    if (!w.graph || !(*w.graph == e.graph)) throw EmbeddingError("word over a different graph");
    BraidWord out{e.m, {}};
    for (const Letter& l : w.letters) {
        const BraidWord& g = e.gen_words.at(l.gen);
        out = compose(out, l.sign > 0 ? g : inverse_braid(g));
    }
    return free_reduce(out);
}

SupportReport support_check(const EmbeddingSpec& e) {
    SupportReport rep;
    std::vector<Point> pts;
    for (const auto& p : e.surface.punctures) pts.push_back(p.pos);
    const int n = (int)e.diagram.circles.size();
    std::vector<LamCoords> traced_c;
    for (int j = 0; j < n; ++j) traced_c.push_back(trace({e.curves.C[j]}, pts));

    // small test squares around each face puncture, sized to exclude all
    // other punctures
    std::vector<LamCoords> face_tests;
    for (int f : e.surface.face_puncture_index) {
        const Point& p = e.surface.punctures[f].pos;
        Rat h = e.surface.width / 4;
        for (int k = 0; k < e.m; ++k) {
            if (k == f) continue;
            const Point& q = e.surface.punctures[k].pos;
            Rat dx = abs(q.x - p.x), dy = abs(q.y - p.y);
            Rat sep = dx > dy ? dx : dy;
            if (sep / 2 < h) h = sep / 2;
        }
        std::vector<Point> sq = {{p.x + h, p.y + h},
                                 {p.x - h, p.y + h},
                                 {p.x - h, p.y - h},
                                 {p.x + h, p.y - h}};
        face_tests.push_back(trace({sq}, pts));
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || !e.graph.has_edge(i, j)) continue;
            if (!(braid_act(e.gen_words[i], traced_c[j]) == traced_c[j])) {
                rep.ok = false;
                rep.violations.push_back("f_" + std::to_string(i + 1) + " moves curve C_" +
                                         std::to_string(j + 1));
            }
        }
        for (size_t f = 0; f < face_tests.size(); ++f) {
            if (!(braid_act(e.gen_words[i], face_tests[f]) == face_tests[f])) {
                rep.ok = false;
                rep.violations.push_back("f_" + std::to_string(i + 1) +
                                         " moves the test circle around face puncture " +
                                         std::to_string(f + 1));
            }
        }
    }
    return rep;
}

namespace {

// log2 of a positive big integer to better than 1/1024, as a rational
Rat log2_int(const Int& z) {
    long ex = 0;
    double mant = mpz_get_d_2exp(&ex, z.get_mpz_t());
    double v = (double)ex + std::log2(mant);
    return Rat(Int((long)std::llround(v * 1024)), Int(1024));
}

}  // namespace

Rat complexity(int m, const BraidWord& beta) {
    if (beta.m != m) throw EmbeddingError("strand count mismatch");
    Int n0 = norm(e_std(m));
    Int n1 = norm(braid_act(beta, e_std(m)));
    if (n1 == n0) return Rat(0);
    Rat c = log2_int(n1) - log2_int(n0);
    c.canonicalize();
    return c;
}

Int certified_lower_bound(int m, const BraidWord& beta) {
    Rat c = complexity(m, beta);
    if (c <= 0) return 0;
    Rat q = c / growth_constant(m);
    Int bound;
    mpz_cdiv_q(bound.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return bound;
}

std::string embedding_to_json(const EmbeddingSpec& e) {
    nlohmann::json j;
    j["graph"] = nlohmann::json::parse(graph_to_json(e.graph));
    j["m"] = e.m;
    j["generators"] = nlohmann::json::array();
    for (const auto& w : e.gen_words) j["generators"].push_back(braid_to_text(w));
    j["diagram"] = nlohmann::json::parse(diagram_to_json(e.diagram));
    return j.dump(2);
}

}  // namespace artifact
