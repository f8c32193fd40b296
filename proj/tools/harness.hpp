#ifndef ARTIFACT_HARNESS_HPP
#define ARTIFACT_HARNESS_HPP

#include <map>
#include <string>
#include <vector>

#include "artifact/circle_diagram.hpp"
#include "artifact/coxeter.hpp"
#include "artifact/embedding.hpp"

namespace artifact {

// ---- experiment reports ----

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One experiment run: parameter list, tabular rows, fitted constants, verdicts.
// Rows are plain strings so reruns with the same seed are byte-identical.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> fitted;
    std::vector<Verdict> verdicts;

    bool passed() const;
    void add_param(const std::string& k, const std::string& v);
    void add_fitted(const std::string& k, const std::string& v);
    void add_verdict(const std::string& n, bool pass, const std::string& detail);
    std::string tsv() const;   // header + rows
    std::string json() const;  // params, fitted constants, verdicts
    // Writes <dir>/<name>.tsv and <dir>/<name>.json.
    void write(const std::string& dir) const;
};

struct LineFit {
    double slope = 0, intercept = 0, r2 = 1;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// ---- presentation homomorphism checker ----

// Finite presentation: generator labels and relator words ("x y^-1 x ...").
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::string> relators;
};

// Verifies that generator |-> images[generator] sends every relator to the
// identity of the right-angled Artin group of g. Throws WordError for images
// missing a generator or relators using undeclared ones.
ExperimentReport check_presentation_hom(const Presentation& p,
                                        const std::map<std::string, ArtinWord>& images,
                                        const Graph& g);

// ---- experiments ----

// Complexity of apply(a_gen^p) for p = 1..p_max and every generator; verdict:
// successive differences >= 1 - 1/16 from p = 2 on.
ExperimentReport growth_experiment(const EmbeddingSpec& e, int p_max);

// 200-ish random geodesics per length L = 1..l_max; verdicts: every sample
// below the certified line kappa*|f|_max*L + 1, per-L minima nondecreasing,
// and least-squares slope of the minima >= 0.05 with R^2 >= 0.9.
ExperimentReport sandwich_experiment(const EmbeddingSpec& e, int l_max, int samples,
                                     std::uint64_t seed);

// Pairwise commutator audit ([f_i,f_j] trivial iff edge) plus purity; the
// audit re-runs what build_embedding enforces, row by row.
ExperimentReport relations_experiment(const EmbeddingSpec& e);

ExperimentReport support_experiment(const EmbeddingSpec& e);

// All distinct reduced words of length <= radius map to distinct braids.
ExperimentReport injectivity_experiment(const EmbeddingSpec& e, int radius);

// Random commutator-subgroup elements of the right-angled Coxeter group:
// the lift to the Artin group preserves geodesic length on every sample, and
// the lift is a homomorphism on `pairs` random pairs.
ExperimentReport cox_experiment(const Graph& g, int max_len, int samples, int pairs,
                                std::uint64_t seed);

// Diagram health: validate, the non-incidence graph, complement planarity
// with a verified witness, commutator-subgroup index; when expect_graph is
// nonempty, also exact isomorphism with that builtin graph.
ExperimentReport diagram_check(const CircleDiagram& d, const std::string& diagram_name,
                               const std::string& expect_graph);

// Exhaustive normal-form audit for one graph: the reduce canonical form
// agrees with shuffle/cancellation reachability on every word of length <=
// max_len (union-find over the full move graph).
ExperimentReport raag_oracle_check(const Graph& g, int max_len);

// The 11 isomorphism classes of graphs on 4 vertices.
std::vector<Graph> all_four_vertex_graphs();

// Certified-lower-bound soundness: random braid words (strands <= max_m,
// length <= max_len), bound never exceeds the word length; plus linear growth
// of the bound along powers of the three-strand pseudo-Anosov sigma_1 sigma_2^-1.
ExperimentReport lowerbound_experiment(int max_m, int max_len, int samples,
                                       std::uint64_t seed);

}  // namespace artifact

#endif
