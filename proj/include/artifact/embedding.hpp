#ifndef ARTIFACT_EMBEDDING_HPP
#define ARTIFACT_EMBEDDING_HPP

#include <string>
#include <vector>

#include "artifact/artin.hpp"
#include "artifact/braid.hpp"
#include "artifact/circle_diagram.hpp"

namespace artifact {

class EmbeddingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
// The commutation pattern of the generator braids does not match the graph.
class RelationFailure : public EmbeddingError {
  public:
    int i, j;
    RelationFailure(const std::string& msg, int i_, int j_)
        : EmbeddingError(msg), i(i_), j(j_) {}
};

// Group homomorphism from the right-angled Artin group of `graph` into the
// pure braid group on m strands, generator i |-> gen_words[i], together with
// the geometric data it was built from.
struct EmbeddingSpec {
    Graph graph;
    int m = 0;
    std::vector<BraidWord> gen_words;
    CircleDiagram diagram;
    SurfaceData surface;
    TwistCurveSet curves;
    // per circle: relax conjugators for the traced B, C, D curves (empty when
    // the curve traces to the empty lamination and twists trivially)
    std::vector<std::array<std::vector<std::pair<int, int>>, 3>> conjugators;
};

// Pipeline: build_surface, twist_curves, trace each curve triple, turn each
// into a twist word, and set f_i = w_B * w_C^-2 * w_D^2 * w_B with the
// leftmost-letter-acts-first convention (so the rightmost twist factor of
// tau_B tau_D^2 tau_C^-2 tau_B is the leading subword). Verifies that every
// f_i is a pure braid and that f_i, f_j commute exactly for graph edges.
EmbeddingSpec build_embedding(const CircleDiagram& d, long long budget = 200000);

// Image of an Artin word: concatenate generator braids along the letters
// (inverses for negative signs), then free-reduce.
BraidWord apply(const EmbeddingSpec& e, const ArtinWord& w);

struct SupportReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Each f_i must fix the traced coordinates of every curve C_j disjoint from
// circle i, and of a small test square around every face puncture.
SupportReport support_check(const EmbeddingSpec& e);

// log2 norm(act(beta, e_std)) - log2 norm(e_std), rounded to a multiple of
// 1/1024 (bit-length based; exact integers feed the approximation).
Rat complexity(int m, const BraidWord& beta);

// ceil(complexity / growth_constant(m)), clamped to >= 0; a certified lower
// bound for the sigma-word length of any representative of beta.
Int certified_lower_bound(int m, const BraidWord& beta);

// JSON dump: graph, m, generator braid words in text format.
std::string embedding_to_json(const EmbeddingSpec& e);

}  // namespace artifact

#endif
