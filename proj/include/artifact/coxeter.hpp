#ifndef ARTIFACT_COXETER_HPP
#define ARTIFACT_COXETER_HPP

#include "artifact/artin.hpp"
#include "artifact/graph.hpp"
#include "artifact/rational.hpp"

namespace artifact {

// Word in the right-angled Coxeter group of `graph`: generators are
// involutions, and commute exactly along graph edges.
struct CoxeterWord {
    const Graph* graph = nullptr;
    std::vector<int> letters;  // vertex indices, no signs
};

CoxeterWord make_cox_word(const Graph& g, const std::vector<int>& letters);

// Canonical geodesic representative (shuffles plus deletion of squares).
CoxeterWord cox_reduce(const CoxeterWord& w);

bool cox_equal(const CoxeterWord& u, const CoxeterWord& v);

// True iff every generator occurs an even number of times, i.e. the element
// lies in the commutator subgroup (kernel of W -> (Z/2)^n).
bool in_commutator(const CoxeterWord& w);

// Lift a commutator-subgroup element to the Artin group over the same graph:
// the d-th occurrence of each generator gets sign (-1)^(d+1). Result reduced.
ArtinWord cox_to_artin(const CoxeterWord& w);

// Index of the commutator subgroup in W: 2^n.
Int commutator_index_check(const Graph& g);

// Random cox-reduced element of the commutator subgroup with geodesic length
// exactly `length` (which must be even). Deterministic per seed.
CoxeterWord random_commutator_element(const Graph& g, int length, std::uint64_t seed);

std::string cox_word_to_text(const CoxeterWord& w);
CoxeterWord cox_word_from_text(const Graph& g, const std::string& text);

}  // namespace artifact

#endif
