// Acceptance gate: ten self-contained checks, one pass/fail line each.
// Run with a criterion number (1..10) or with no argument for all.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

#include "../tools/harness.hpp"

using namespace artifact;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string verdict_summary(const ExperimentReport& rep) {
    std::string out;
    for (const auto& v : rep.verdicts) {
        if (!out.empty()) out += "; ";
        out += v.name + (v.pass ? " ok" : " FAILED (" + v.detail + ")");
    }
    return out;
}

// 1. Exhaustive normal-form audit: reduce-equality equals move-graph
// reachability for every word of length <= 8 over every 4-vertex graph
// (up to isomorphism; both sides of the check are label-equivariant).
Outcome crit1() {
    for (const Graph& g : all_four_vertex_graphs()) {
        ExperimentReport rep = raag_oracle_check(g, 8);
        if (!rep.passed())
            return {false, "graph with " + std::to_string(g.edge_count()) + " edges: " +
                               verdict_summary(rep)};
    }
    return {true, "11 graphs x 19173961 words, exact agreement"};
}

// 2. Coxeter commutator lift: geodesic-length preserving on 10^4 samples,
// multiplicative on 10^3 pairs, injective on all short elements over the
// 4-vertex graphs.
Outcome crit2() {
    ExperimentReport rep = cox_experiment(builtin_graph("icosahedron"), 20, 10000, 1000, 7);
    if (!rep.passed()) return {false, verdict_summary(rep)};

    long long classes_total = 0;
    for (const Graph& g : all_four_vertex_graphs()) {
        // all commutator-subgroup elements of geodesic length <= 8: distinct
        // Coxeter classes must lift to distinct Artin classes
        std::map<std::vector<int>, int> cox_class;
        std::map<std::vector<std::pair<int, int>>, int> artin_class;
        std::vector<int> digits(8, 0);
        CoxeterWord w{&g, {}};
        for (int l = 0; l <= 8; ++l) {
            std::fill(digits.begin(), digits.end(), 0);
            long long count = 1;
            for (int i = 0; i < l; ++i) count *= 4;
            w.letters.resize(l);
            for (long long idx = 0; idx < count; ++idx) {
                for (int i = 0; i < l; ++i) w.letters[i] = digits[i];
                CoxeterWord r = cox_reduce(w);
                if (in_commutator(r)) {
                    auto [it, fresh] = cox_class.emplace(r.letters, int(cox_class.size()));
                    if (fresh) {
                        ArtinWord a = cox_to_artin(r);
                        std::vector<std::pair<int, int>> key;
                        for (const auto& x : a.letters) key.push_back({x.gen, x.sign});
                        auto [jt, fresh2] = artin_class.emplace(key, it->second);
                        if (!fresh2)
                            return {false, "lift collision on a graph with " +
                                               std::to_string(g.edge_count()) + " edges"};
                    }
                }
                for (int i = 0; i < l; ++i) {
                    if (++digits[i] < 4) break;
                    digits[i] = 0;
                }
            }
        }
        classes_total += (long long)cox_class.size();
    }
    return {true, verdict_summary(rep) + "; " + std::to_string(classes_total) +
                      " commutator classes lift injectively"};
}

// 3. Lamination action relations on random coordinate vectors.
Outcome crit3() {
    Rng rng(11);
    for (int t = 0; t < 1000; ++t) {
        int m = 3 + int(rng.below(10));
        LamCoords c = zero_coords(m);
        for (int i = 0; i < m - 2; ++i) {
            c.a[i] = Int((long)rng.below(2000001) - 1000000);
            c.b[i] = Int((long)rng.below(2000001) - 1000000);
        }
        int k = 1 + int(rng.below(m - 1));
        int s = rng.below(2) ? 1 : -1;
        if (!(sigma_action(sigma_action(c, k, s), k, -s) == c))
            return {false, "inverse round-trip failed at m=" + std::to_string(m)};
        if (m >= 4) {
            int j = 1 + int(rng.below(m - 2));
            if (!(act(c, {{j, 1}, {j + 1, 1}, {j, 1}}) == act(c, {{j + 1, 1}, {j, 1}, {j + 1, 1}})))
                return {false, "braid relation failed at m=" + std::to_string(m)};
        }
        if (m >= 5) {
            int i = 1 + int(rng.below(m - 4));
            int j = i + 2 + int(rng.below(m - i - 3));
            if (!(act(c, {{i, 1}, {j, 1}}) == act(c, {{j, 1}, {i, 1}})))
                return {false, "far commutation failed at m=" + std::to_string(m)};
        }
    }
    return {true, "1000 random vectors, all relations exact"};
}

// 4. Relaxation round-trip: conjugator restores round coordinates exactly,
// never exhausting a 10^5 budget.
Outcome crit4() {
    Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
        int m = 3 + int(rng.below(7));
        int p = 1 + int(rng.below(m - 1));
        int q = p + 1 + int(rng.below(m - p));
        if (p == 1 && q == m) {  // boundary-parallel: not a single essential curve
            --t;
            continue;
        }
        LamCoords c = round_coords(m, {p, q});
        int len = 1 + int(rng.below(20));
        std::vector<std::pair<int, int>> w;
        for (int i = 0; i < len; ++i)
            w.push_back({1 + int(rng.below(m - 1)), rng.below(2) ? 1 : -1});
        c = act(c, w);
        try {
            RelaxResult r = relax(c, 100000);
            if (!(act(c, r.conjugator) == round_coords(m, r.target)))
                return {false, "conjugator does not restore a round curve (t=" +
                                   std::to_string(t) + ")"};
        } catch (const BudgetExhausted&) {
            return {false, "budget exhausted at t=" + std::to_string(t)};
        }
    }
    return {true, "1000 round-trips exact, zero budget exhaustions"};
}

// 5. Relation audit for the three fully-built diagrams.
Outcome crit5() {
    std::string detail;
    for (const std::string name : {"disjoint_pair", "crossing_pair", "pentagon_c5"}) {
        EmbeddingSpec e = build_embedding(builtin_diagram(name));
        ExperimentReport rel = relations_experiment(e);
        ExperimentReport sup = support_experiment(e);
        if (!rel.passed() || !sup.passed())
            return {false, name + ": " + verdict_summary(rel) + "; " + verdict_summary(sup)};
        detail += (detail.empty() ? "" : "; ") + name + " ok";
    }
    return {true, detail};
}

// 6. Exponential complexity growth along generator powers.
Outcome crit6() {
    ExperimentReport a = growth_experiment(build_embedding(builtin_diagram("crossing_pair")), 12);
    if (!a.passed()) return {false, "crossing_pair: " + verdict_summary(a)};
    ExperimentReport b = growth_experiment(build_embedding(builtin_diagram("pentagon_c5")), 8);
    if (!b.passed()) return {false, "pentagon_c5: " + verdict_summary(b)};
    return {true, "all successive differences >= 15/16"};
}

// 7. Sandwich: complexity between linear envelopes on the pentagon diagram.
Outcome crit7() {
    ExperimentReport rep =
        sandwich_experiment(build_embedding(builtin_diagram("pentagon_c5")), 25, 200, 7);
    return {rep.passed(), verdict_summary(rep)};
}

// 8. Injectivity evidence at radius 3 for the crossing-pair diagram.
Outcome crit8() {
    ExperimentReport rep =
        injectivity_experiment(build_embedding(builtin_diagram("crossing_pair")), 3);
    return {rep.passed(), verdict_summary(rep)};
}

// 9. Lower-bound soundness and pseudo-Anosov linear growth.
Outcome crit9() {
    ExperimentReport rep = lowerbound_experiment(7, 50, 1000, 17);
    return {rep.passed(), verdict_summary(rep)};
}

// 10. Icosahedral diagram: graph isomorphism, complement witness, index.
Outcome crit10() {
    ExperimentReport rep = diagram_check(builtin_diagram("icosa"), "icosa", "icosahedron");
    bool index_ok = false, nonplanar = false;
    for (const auto& row : rep.rows) {
        if (row[0] == "commutator_index" && row[1] == "4096") index_ok = true;
        if (row[0] == "complement_planar" && row[1] == "0") nonplanar = true;
    }
    if (!index_ok) return {false, "commutator index is not 4096; " + verdict_summary(rep)};
    if (!nonplanar) return {false, "complement is planar; " + verdict_summary(rep)};
    return {rep.passed(), verdict_summary(rep)};
}

}  // namespace

int main(int argc, char** argv) {
    Outcome (*crits[])() = {crit1, crit2, crit3, crit4, crit5,
                            crit6, crit7, crit8, crit9, crit10};
    const double budgets[] = {120, 120, 60, 180, 300, 300, 600, 300, 120, 60};
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (int i = 1; i <= 10; ++i) {
        if (only && i != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = crits[i - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs <= budgets[i - 1];
        bool pass = o.pass && in_budget;
        std::printf("criterion %d: %s (%.1fs%s) %s\n", i, pass ? "PASS" : "FAIL", secs,
                    in_budget ? "" : ", over time budget", o.detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures ? 1 : 0;
}
