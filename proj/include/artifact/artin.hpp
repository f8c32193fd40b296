#ifndef ARTIFACT_ARTIN_HPP
#define ARTIFACT_ARTIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "artifact/graph.hpp"

namespace artifact {

class WordError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// One signed generator: vertex index into the defining graph, sign in {+1,-1}.
struct Letter {
    int gen;
    int sign;
    bool operator==(const Letter&) const = default;
};

// Word in the right-angled Artin group of `graph`: generators commute exactly
// when their vertices are joined by an edge.
struct ArtinWord {
    const Graph* graph = nullptr;
    std::vector<Letter> letters;
};

ArtinWord make_word(const Graph& g, const std::vector<Letter>& letters);

// Canonical geodesic normal form: cancel inverse pairs that commuting swaps can
// make adjacent, then order letters left-greedily by generator index.
ArtinWord reduce(const ArtinWord& w);

bool equal(const ArtinWord& u, const ArtinWord& v);

int geodesic_length(const ArtinWord& w);
int letter_count(const ArtinWord& w, int gen);

ArtinWord concat(const ArtinWord& u, const ArtinWord& v);
ArtinWord inverse(const ArtinWord& w);

// Uniform-ish geodesic sampler: appends random signed generators, rejecting
// letters that fail to increase the geodesic length. Deterministic per seed.
ArtinWord random_geodesic(const Graph& g, int length, std::uint64_t seed);

// Text format: whitespace-separated tokens, "a" or "a^-1".
std::string word_to_text(const ArtinWord& w);
ArtinWord word_from_text(const Graph& g, const std::string& text);

// Deterministic splittable RNG stream (splitmix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // unbiased-enough for desk-scale sampling
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0x517cc1b727220a95ULL * (index + 1)));
    r.next();
    return r.next();
}

}  // namespace artifact

#endif
