#ifndef ARTIFACT_BRAID_HPP
#define ARTIFACT_BRAID_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artifact/lamination.hpp"

namespace artifact {

class BraidError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Word in the braid group B_m on m strands; letters (k, s) mean sigma_k^s.
struct BraidWord {
    int m = 0;
    std::vector<std::pair<int, int>> letters;
    bool operator==(const BraidWord&) const = default;
};

BraidWord make_braid(int m, const std::vector<std::pair<int, int>>& letters);

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord inverse_braid(const BraidWord& w);
// Cancels adjacent sigma_k^{+1} sigma_k^{-1} pairs only.
BraidWord free_reduce(const BraidWord& w);

// Image in the symmetric group, as the final position of each strand:
// result[i-1] = where puncture i ends up (1-indexed).
std::vector<int> braid_permutation(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

// Coordinates act letter-by-letter, leftmost letter first.
LamCoords braid_act(const BraidWord& w, const LamCoords& c);

// Full (Dehn) twist about the round curve enclosing punctures p..q:
// (sigma_p ... sigma_{q-1})^(q-p+1).
BraidWord full_twist_word(int m, RoundSpec r);

// Twist along the simple closed curve with coordinates c: conjugate c round
// via relax, apply the full twist there, conjugate back.
BraidWord dehn_twist_word(const LamCoords& c, int direction, long long budget = 100000);

// Exact equality in B_m: equal action on the standard curve family and on
// every round curve, plus equal exponent sum (the curve action alone is blind
// to central full-twist powers; the exponent sum separates them).
bool equal_braids(const BraidWord& u, const BraidWord& v);

// Text format: whitespace-separated "s3 s1^-1 ...".
std::string braid_to_text(const BraidWord& w);
BraidWord braid_from_text(int m, const std::string& text);

}  // namespace artifact

#endif
