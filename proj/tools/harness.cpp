#include "harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace artifact {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string rat_str(const Rat& r) { return format_rational(r); }

}  // namespace

bool ExperimentReport::passed() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void ExperimentReport::add_param(const std::string& k, const std::string& v) {
    params.push_back({k, v});
}

void ExperimentReport::add_fitted(const std::string& k, const std::string& v) {
    fitted.push_back({k, v});
}

void ExperimentReport::add_verdict(const std::string& n, bool pass, const std::string& detail) {
    verdicts.push_back({n, pass, detail});
}

std::string ExperimentReport::tsv() const {
    std::ostringstream os;
    for (size_t i = 0; i < columns.size(); ++i) os << (i ? "\t" : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
        os << "\n";
    }
    return os.str();
}

std::string ExperimentReport::json() const {
    nlohmann::json j;
    j["experiment"] = name;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["fitted"] = nlohmann::json::object();
    for (const auto& [k, v] : fitted) j["fitted"][k] = v;
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts)
        j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    j["pass"] = passed();
    j["rows"] = rows.size();
    return j.dump(2) + "\n";
}

void ExperimentReport::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/" + name + ".tsv") << tsv();
    std::ofstream(dir + "/" + name + ".json") << json();
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    LineFit f;
    const size_t n = xs.size();
    if (n < 2) return f;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double det = n * sxx - sx * sx;
    if (det == 0) return f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean = sy / n;
    for (size_t i = 0; i < n; ++i) {
        double p = f.slope * xs[i] + f.intercept;
        ss_res += (ys[i] - p) * (ys[i] - p);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    f.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return f;
}

// ---- presentation homomorphism checker ----

namespace {

// Tokens "x" / "x^-1" over the declared generators, as (index, sign) pairs.
std::vector<std::pair<int, int>> parse_relator(const Presentation& p, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, int>> out;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        auto it = std::find(p.generators.begin(), p.generators.end(), tok);
        if (it == p.generators.end()) throw WordError("relator uses undeclared generator: " + tok);
        out.push_back({int(it - p.generators.begin()), sign});
    }
    return out;
}

}  // namespace

ExperimentReport check_presentation_hom(const Presentation& p,
                                        const std::map<std::string, ArtinWord>& images,
                                        const Graph& g) {
    ExperimentReport rep;
    rep.name = "presentation_hom";
    rep.columns = {"relator", "image_geodesic_length", "trivial"};
    std::vector<ArtinWord> img;
    for (const auto& label : p.generators) {
        auto it = images.find(label);
        if (it == images.end()) throw WordError("no image for generator: " + label);
        img.push_back(it->second);
    }
    bool all_ok = true;
    std::string first_bad;
    for (const auto& rel : p.relators) {
        ArtinWord w{&g, {}};
        for (auto [gen, sign] : parse_relator(p, rel))
            w = concat(w, sign > 0 ? img[gen] : inverse(img[gen]));
        int len = geodesic_length(w);
        bool ok = len == 0;
        rep.rows.push_back({rel, std::to_string(len), ok ? "1" : "0"});
        if (!ok && all_ok) {
            all_ok = false;
            first_bad = rel;
        }
    }
    rep.add_param("generators", std::to_string(p.generators.size()));
    rep.add_param("relators", std::to_string(p.relators.size()));
    rep.add_verdict("all_relators_trivial", all_ok,
                    all_ok ? "every relator maps to the identity"
                           : "failing relator: " + first_bad);
    return rep;
}

// ---- experiments ----

ExperimentReport growth_experiment(const EmbeddingSpec& e, int p_max) {
    ExperimentReport rep;
    rep.name = "growth";
    rep.columns = {"generator", "p", "complexity", "diff"};
    rep.add_param("p_max", std::to_string(p_max));
    rep.add_param("strands", std::to_string(e.m));
    const Rat threshold(15, 16);
    bool ok = true;
    std::string detail;
    for (int gen = 0; gen < e.graph.n(); ++gen) {
        ArtinWord a = make_word(e.graph, {{gen, 1}});
        ArtinWord w{&e.graph, {}};
        Rat prev = 0;
        for (int p = 1; p <= p_max; ++p) {
            w = concat(w, a);
            Rat c = complexity(e.m, apply(e, w));
            Rat diff = c - prev;
            rep.rows.push_back({e.graph.label(gen), std::to_string(p), rat_str(c),
                                rat_str(diff)});
            if (p >= 2 && diff < threshold) {
                ok = false;
                if (detail.empty())
                    detail = "generator " + e.graph.label(gen) + ", p=" + std::to_string(p) +
                             ": diff " + rat_str(diff);
            }
            prev = c;
        }
    }
    rep.add_verdict("steps_at_least_15_16", ok,
                    ok ? "all successive differences >= 15/16" : detail);
    return rep;
}

ExperimentReport sandwich_experiment(const EmbeddingSpec& e, int l_max, int samples,
                                     std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "sandwich";
    rep.columns = {"L", "sample", "complexity"};
    rep.add_param("l_max", std::to_string(l_max));
    rep.add_param("samples_per_length", std::to_string(samples));
    rep.add_param("seed", std::to_string(seed));
    Rat f_max = 0;
    for (const auto& w : e.gen_words)
        if (Rat(int(w.letters.size())) > f_max) f_max = int(w.letters.size());
    Rat kappa = growth_constant(e.m);
    Rat upper_slope = kappa * f_max;
    bool upper_ok = true;
    std::string upper_detail;
    std::vector<double> mins(l_max + 1, 0), maxs(l_max + 1, 0);
    std::vector<Rat> min_exact(l_max + 1, Rat(0));
    std::uint64_t idx = 0;
    for (int L = 1; L <= l_max; ++L) {
        bool first = true;
        for (int s = 0; s < samples; ++s, ++idx) {
            ArtinWord w = random_geodesic(e.graph, L, derive_seed(seed, idx));
            Rat c = complexity(e.m, apply(e, w));
            rep.rows.push_back({std::to_string(L), std::to_string(s), rat_str(c)});
            if (c > upper_slope * L + 1 && upper_ok) {
                upper_ok = false;
                upper_detail = "L=" + std::to_string(L) + " sample " + std::to_string(s) +
                               ": " + rat_str(c);
            }
            double cd = c.get_d();
            if (first || c < min_exact[L]) min_exact[L] = c;
            if (first || cd < mins[L]) mins[L] = cd;
            if (first || cd > maxs[L]) maxs[L] = cd;
            first = false;
        }
    }
    bool mono = true;
    std::string mono_detail;
    for (int L = 2; L <= l_max; ++L)
        if (min_exact[L] < min_exact[L - 1]) {
            mono = false;
            mono_detail = "minimum drops at L=" + std::to_string(L);
            break;
        }
    std::vector<double> ls, lo, hi;
    for (int L = 1; L <= l_max; ++L) {
        ls.push_back(L);
        lo.push_back(mins[L]);
        hi.push_back(maxs[L]);
    }
    LineFit fl = fit_line(ls, lo), fh = fit_line(ls, hi);
    rep.add_fitted("kappa", rat_str(kappa));
    rep.add_fitted("f_max", rat_str(f_max));
    rep.add_fitted("upper_slope_certified", rat_str(upper_slope));
    rep.add_fitted("upper_envelope_slope_fitted", fmt6(fh.slope));
    rep.add_fitted("lower_envelope_slope_fitted", fmt6(fl.slope));
    rep.add_fitted("lower_envelope_intercept_fitted", fmt6(fl.intercept));
    rep.add_fitted("lower_envelope_r2", fmt6(fl.r2));
    rep.add_fitted("generator_count", std::to_string(e.graph.n()));
    rep.add_verdict("upper_line_certified", upper_ok,
                    upper_ok ? "all samples below kappa*f_max*L + 1" : upper_detail);
    rep.add_verdict("lower_minima_nondecreasing", mono,
                    mono ? "per-length minima nondecreasing" : mono_detail);
    bool slope_ok = fl.slope >= 0.05 && fl.r2 >= 0.9;
    rep.add_verdict("lower_slope_positive", slope_ok,
                    "slope " + fmt6(fl.slope) + ", r2 " + fmt6(fl.r2));
    return rep;
}

ExperimentReport relations_experiment(const EmbeddingSpec& e) {
    ExperimentReport rep;
    rep.name = "relations";
    rep.columns = {"i", "j", "edge", "commute"};
    const int n = e.graph.n();
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool edge = e.graph.has_edge(i, j);
            bool comm = equal_braids(compose(e.gen_words[i], e.gen_words[j]),
                                     compose(e.gen_words[j], e.gen_words[i]));
            rep.rows.push_back({e.graph.label(i), e.graph.label(j), edge ? "1" : "0",
                                comm ? "1" : "0"});
            if (edge != comm) {
                ok = false;
                if (detail.empty())
                    detail = e.graph.label(i) + "," + e.graph.label(j) +
                             (comm ? " commute without an edge" : " fail to commute");
            }
        }
    bool pure = true;
    for (int i = 0; i < n && pure; ++i) {
        auto perm = braid_permutation(e.gen_words[i]);
        for (int k = 0; k < e.m; ++k)
            if (perm[k] != k + 1) pure = false;
    }
    rep.add_param("generators", std::to_string(n));
    rep.add_verdict("commute_iff_edge", ok, ok ? "all pairs match the graph" : detail);
    rep.add_verdict("pure_braids", pure,
                    pure ? "every generator braid is pure" : "non-identity permutation");
    return rep;
}

ExperimentReport support_experiment(const EmbeddingSpec& e) {
    ExperimentReport rep;
    rep.name = "support";
    rep.columns = {"violation"};
    SupportReport s = support_check(e);
    for (const auto& v : s.violations) rep.rows.push_back({v});
    rep.add_verdict("support_clean", s.ok,
                    s.ok ? "generators fix all disjoint reference curves"
                         : std::to_string(s.violations.size()) + " violations");
    return rep;
}

ExperimentReport injectivity_experiment(const EmbeddingSpec& e, int radius) {
    ExperimentReport rep;
    rep.name = "injectivity";
    rep.columns = {"words", "pairs", "collisions"};
    rep.add_param("radius", std::to_string(radius));
    // all distinct reduced words of length <= radius, by exhaustive reduction
    std::vector<ArtinWord> reps;
    std::vector<std::vector<std::pair<int, int>>> keys;
    const int n = e.graph.n();
    std::vector<Letter> cur;
    auto visit = [&](auto&& self, int rem) -> void {
        ArtinWord r = reduce(ArtinWord{&e.graph, cur});
        std::vector<std::pair<int, int>> key;
        for (const auto& l : r.letters) key.push_back({l.gen, l.sign});
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(key);
            reps.push_back(r);
        }
        if (!rem) return;
        for (int g = 0; g < n; ++g)
            for (int s : {1, -1}) {
                cur.push_back({g, s});
                self(self, rem - 1);
                cur.pop_back();
            }
    };
    visit(visit, radius);
    std::vector<BraidWord> images;
    for (const auto& w : reps) images.push_back(apply(e, w));
    long long pairs = 0, collisions = 0;
    std::string detail;
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            ++pairs;
            if (equal_braids(images[i], images[j])) {
                ++collisions;
                if (detail.empty())
                    detail = "'" + word_to_text(reps[i]) + "' vs '" + word_to_text(reps[j]) + "'";
            }
        }
    rep.rows.push_back({std::to_string(reps.size()), std::to_string(pairs),
                        std::to_string(collisions)});
    rep.add_verdict("distinct_images", collisions == 0,
                    collisions == 0 ? std::to_string(pairs) + " pairs all distinct" : detail);
    return rep;
}

ExperimentReport cox_experiment(const Graph& g, int max_len, int samples, int pairs,
                                std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "cox";
    rep.columns = {"sample", "coxeter_length", "artin_length", "ok"};
    rep.add_param("max_len", std::to_string(max_len));
    rep.add_param("samples", std::to_string(samples));
    rep.add_param("pairs", std::to_string(pairs));
    rep.add_param("seed", std::to_string(seed));
    Rng rng(seed);
    // shortest commutator-subgroup geodesics have length 4 (even counts of at
    // least two non-commuting generators)
    auto even_len = [&](int hi) {
        int steps = std::max(1, hi / 2 - 1);
        return 2 * (2 + int(rng.below(steps)));
    };
    bool iso_ok = true;
    std::string iso_detail;
    for (int s = 0; s < samples; ++s) {
        int len = even_len(max_len);
        CoxeterWord w = random_commutator_element(g, len, derive_seed(seed, s));
        int lg = geodesic_length(cox_to_artin(w));
        bool ok = lg == len;
        rep.rows.push_back({std::to_string(s), std::to_string(len), std::to_string(lg),
                            ok ? "1" : "0"});
        if (!ok && iso_ok) {
            iso_ok = false;
            iso_detail = "sample " + std::to_string(s) + ": " + std::to_string(lg) +
                         " != " + std::to_string(len);
        }
    }
    bool hom_ok = true;
    std::string hom_detail;
    for (int t = 0; t < pairs; ++t) {
        int lu = even_len(max_len / 2);
        int lv = even_len(max_len / 2);
        CoxeterWord u = random_commutator_element(g, lu, derive_seed(seed, 1000000 + 2 * t));
        CoxeterWord v = random_commutator_element(g, lv, derive_seed(seed, 1000001 + 2 * t));
        CoxeterWord uv{&g, u.letters};
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        if (!equal(cox_to_artin(uv), concat(cox_to_artin(u), cox_to_artin(v)))) {
            hom_ok = false;
            if (hom_detail.empty()) hom_detail = "pair " + std::to_string(t);
        }
    }
    rep.add_verdict("length_preserved", iso_ok,
                    iso_ok ? "lift is geodesic-length preserving on all samples" : iso_detail);
    rep.add_verdict("homomorphism", hom_ok,
                    hom_ok ? "lift multiplicative on all pairs" : hom_detail);
    return rep;
}

ExperimentReport diagram_check(const CircleDiagram& d, const std::string& diagram_name,
                               const std::string& expect_graph) {
    ExperimentReport rep;
    rep.name = "diagram_check";
    rep.columns = {"key", "value"};
    rep.add_param("diagram", diagram_name);
    try {
        validate(d);
        rep.add_verdict("general_position", true, "validate passed");
    } catch (const DiagramError& err) {
        rep.add_verdict("general_position", false, err.what());
        return rep;
    }
    Graph del = non_incidence_graph(d);
    rep.rows.push_back({"circles", std::to_string(d.circles.size())});
    rep.rows.push_back({"graph_edges", std::to_string(del.edge_count())});
    if (!expect_graph.empty()) {
        Graph want = builtin_graph(expect_graph);
        auto iso = is_isomorphic(del, want);
        rep.rows.push_back({"isomorphic_to_" + expect_graph, iso ? "1" : "0"});
        rep.add_verdict("graph_isomorphic", iso.has_value(),
                        iso ? "exact isomorphism with " + expect_graph
                            : "no isomorphism with " + expect_graph);
    }
    Graph comp = complement(del);
    PlanarityResult pr = is_planar(comp);
    rep.rows.push_back({"complement_planar", pr.planar ? "1" : "0"});
    if (!pr.planar) {
        bool verified = verify_kuratowski_witness(comp, pr);
        rep.rows.push_back({"complement_witness", pr.witness_kind});
        rep.add_verdict("complement_witness_verified", verified,
                        pr.witness_kind + " subdivision " +
                            (verified ? "verified" : "FAILED verification"));
    }
    Int index = commutator_index_check(del);
    rep.rows.push_back({"commutator_index", index.get_str()});
    rep.add_verdict("commutator_index_power_of_two", index == (Int(1) << del.n()),
                    "index " + index.get_str());
    return rep;
}

// ---- exhaustive normal-form audit ----

namespace {

// Union-find over word indices, parent < 0 encodes root with size -parent.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(long long n) : parent(n, -1) {}
    int find(int x) {
        while (parent[x] >= 0) {
            int p = parent[x];
            if (parent[p] >= 0) {
                parent[x] = parent[p];
                x = parent[p];
            } else {
                return p;
            }
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (parent[a] > parent[b]) std::swap(a, b);
        parent[a] += parent[b];
        parent[b] = a;
    }
};

}  // namespace

ExperimentReport raag_oracle_check(const Graph& g, int max_len) {
    ExperimentReport rep;
    rep.name = "raag_oracle";
    rep.columns = {"length", "words"};
    rep.add_param("max_len", std::to_string(max_len));
    rep.add_param("graph_edges", std::to_string(g.edge_count()));
    const int alpha = 2 * g.n();  // signed letters; digit d: gen d>>1, sign by d&1
    std::vector<long long> pw(max_len + 2), off(max_len + 2);
    pw[0] = 1;
    for (int i = 1; i <= max_len + 1; ++i) pw[i] = pw[i - 1] * alpha;
    off[0] = 0;
    for (int l = 1; l <= max_len + 1; ++l) off[l] = off[l - 1] + pw[l - 1];
    const long long total = off[max_len + 1];
    if (total > (1LL << 31) - 2) throw WordError("word space too large for the oracle");

    // every single shuffle or cancellation move is an edge of the move graph
    Dsu dsu(total);
    std::vector<int> d(max_len, 0);
    for (int l = 2; l <= max_len; ++l) {
        std::fill(d.begin(), d.end(), 0);
        for (long long idx = 0; idx < pw[l]; ++idx) {
            long long base = off[l] + idx;
            for (int i = 0; i + 1 < l; ++i) {
                int gi = d[i] >> 1, gj = d[i + 1] >> 1;
                if (gi == gj) {
                    if ((d[i] ^ d[i + 1]) == 1) {  // adjacent inverse pair
                        long long shorter = idx % pw[i] + (idx / pw[i + 2]) * pw[i];
                        dsu.unite(int(base), int(off[l - 2] + shorter));
                    }
                } else if (g.has_edge(gi, gj)) {
                    long long sw = idx + (long long)(d[i] - d[i + 1]) * (pw[i + 1] - pw[i]);
                    dsu.unite(int(base), int(off[l] + sw));
                }
            }
            for (int i = 0; i < l; ++i) {
                if (++d[i] < alpha) break;
                d[i] = 0;
            }
        }
    }

    // reduce must land in the same move-graph component and be constant on it;
    // the stored canonical index then separates distinct components for free
    std::vector<int> canon(total, -1);
    ArtinWord w{&g, {}};
    bool ok = true;
    std::string detail;
    for (int l = 0; l <= max_len && ok; ++l) {
        std::fill(d.begin(), d.end(), 0);
        w.letters.resize(l);
        for (long long idx = 0; idx < pw[l] && ok; ++idx) {
            for (int i = 0; i < l; ++i) w.letters[i] = Letter{d[i] >> 1, (d[i] & 1) ? -1 : 1};
            ArtinWord r = reduce(w);
            long long ridx = off[r.letters.size()];
            for (size_t i = 0; i < r.letters.size(); ++i)
                ridx += (long long)(r.letters[i].gen * 2 + (r.letters[i].sign < 0)) * pw[i];
            int ra = dsu.find(int(off[l] + idx));
            int rb = dsu.find(int(ridx));
            if (ra != rb) {
                ok = false;
                detail = "reduce left its equivalence class at length " + std::to_string(l);
            } else if (canon[ra] < 0) {
                canon[ra] = int(ridx);
            } else if (canon[ra] != int(ridx)) {
                ok = false;
                detail = "reduce not constant on a class at length " + std::to_string(l);
            }
            for (int i = 0; i < l; ++i) {
                if (++d[i] < alpha) break;
                d[i] = 0;
            }
        }
        rep.rows.push_back({std::to_string(l), std::to_string(pw[l])});
    }
    rep.add_verdict("normal_form_matches_reachability", ok,
                    ok ? std::to_string(total) + " words agree with the move-graph classes"
                       : detail);
    return rep;
}

std::vector<Graph> all_four_vertex_graphs() {
    const std::vector<std::vector<std::pair<int, int>>> edge_sets = {
        {},
        {{0, 1}},
        {{0, 1}, {2, 3}},
        {{0, 1}, {1, 2}},
        {{0, 1}, {1, 2}, {0, 2}},
        {{0, 1}, {1, 2}, {2, 3}},
        {{0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {{0, 1}, {1, 2}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
    };
    std::vector<Graph> out;
    for (const auto& es : edge_sets) {
        Graph g({"a", "b", "c", "d"});
        for (auto [u, v] : es) g.add_edge(u, v);
        out.push_back(g);
    }
    return out;
}

ExperimentReport lowerbound_experiment(int max_m, int max_len, int samples,
                                       std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "lowerbound";
    rep.columns = {"kind", "index", "strands", "length", "bound", "ok"};
    rep.add_param("max_m", std::to_string(max_m));
    rep.add_param("max_len", std::to_string(max_len));
    rep.add_param("samples", std::to_string(samples));
    rep.add_param("seed", std::to_string(seed));
    bool sound = true;
    std::string detail;
    for (int s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, s));
        int m = 3 + int(rng.below(max_m - 2));
        int len = 1 + int(rng.below(max_len));
        BraidWord w{m, {}};
        for (int i = 0; i < len; ++i)
            w.letters.push_back({1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1});
        Int b = certified_lower_bound(m, w);
        bool ok = b <= len;
        rep.rows.push_back({"random", std::to_string(s), std::to_string(m),
                            std::to_string(len), b.get_str(), ok ? "1" : "0"});
        if (!ok && sound) {
            sound = false;
            detail = "sample " + std::to_string(s) + ": bound " + b.get_str() + " > length " +
                     std::to_string(len);
        }
    }
    // powers of the three-strand pseudo-Anosov sigma_1 sigma_2^-1
    std::vector<double> ks, bs;
    BraidWord pa{3, {}};
    for (int k = 1; k <= 200; ++k) {
        pa.letters.push_back({1, 1});
        pa.letters.push_back({2, -1});
        if (k % 10 == 0) {
            Int b = certified_lower_bound(3, pa);
            rep.rows.push_back({"pseudo_anosov", std::to_string(k), "3",
                                std::to_string(2 * k), b.get_str(), "1"});
            ks.push_back(k);
            bs.push_back(b.get_d());
        }
    }
    LineFit f = fit_line(ks, bs);
    rep.add_fitted("pa_bound_slope", fmt6(f.slope));
    rep.add_fitted("pa_bound_r2", fmt6(f.r2));
    rep.add_verdict("bound_sound", sound,
                    sound ? "bound never exceeds the word length" : detail);
    rep.add_verdict("pa_bound_linear", f.slope > 0.1,
                    "fitted slope " + fmt6(f.slope));
    return rep;
}

}  // namespace artifact
