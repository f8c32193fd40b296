#ifndef ARTIFACT_LAMINATION_HPP
#define ARTIFACT_LAMINATION_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artifact/rational.hpp"

namespace artifact {

class LamError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class SelfIntersection : public LamError {
  public:
    using LamError::LamError;
};
class PunctureHit : public LamError {
  public:
    using LamError::LamError;
};
class HomotopicComponents : public LamError {
  public:
    using LamError::LamError;
};
class NotASingleCurve : public LamError {
  public:
    using LamError::LamError;
};
class BudgetExhausted : public LamError {
  public:
    Int best_norm;
    BudgetExhausted(const std::string& msg, Int best) : LamError(msg), best_norm(std::move(best)) {}
};

// Triangulation coordinates for integral laminations (multicurves) in the
// m-punctured disk, punctures on a horizontal axis numbered 1..m left to
// right. Reference system: the vertical line through each puncture and the
// vertical "gap" line between each adjacent pair. For a taut multicurve let
//   beta_i   = crossings with gap line i (between punctures i and i+1),
//   above_j / below_j = crossings with the vertical through puncture j that
//                       lie above / below it.
// Then for i = 1..m-2:
//   a_i = (below_{i+1} - above_{i+1}) / 2,   b_i = (beta_i - beta_{i+1}) / 2.
// The zero vector is the empty multicurve. sigma_action below realizes the
// braid generators as piecewise-linear bijections of these coordinates.
struct LamCoords {
    int m = 0;
    std::vector<Int> a, b;  // length m-2 each
    bool operator==(const LamCoords&) const = default;
};

LamCoords zero_coords(int m);

// Round curve around the contiguous block of punctures p..q.
struct RoundSpec {
    int p = 0, q = 0;
    bool operator==(const RoundSpec&) const = default;
};

// Action of the half-twist swapping punctures k, k+1 (1 <= k <= m-1);
// sign +1 is the counterclockwise twist. Exact and invertible.
LamCoords sigma_action(const LamCoords& c, int k, int sign);

// Apply a braid word given as (index, sign) letters, leftmost letter first.
LamCoords act(const LamCoords& c, const std::vector<std::pair<int, int>>& word);

// 1-norm of the coordinate vector; zero iff empty multicurve.
Int norm(const LamCoords& c);

LamCoords round_coords(int m, RoundSpec r);

// Sum of round curves; the intervals must be pairwise nested or disjoint.
LamCoords multi_round_coords(int m, const std::vector<RoundSpec>& rs);

// The standard curve family {(1,k) : k = 2..m-1}, the measurement basepoint.
LamCoords e_std(int m);

// Exact coordinates of the isotopy class of a polygonal multicurve: raw
// crossings with the reference lines are collected, inessential crossing
// pairs (empty bigons) cancelled, coordinates read off. Components with zero
// contribution (enclosing <= 1 puncture, or boundary-parallel) are dropped.
LamCoords trace(const std::vector<std::vector<Point>>& polygons,
                const std::vector<Point>& punctures);

struct RelaxResult {
    std::vector<std::pair<int, int>> conjugator;  // act(c, conjugator) is round
    RoundSpec target;
};

// Untangle a single essential simple closed curve to a round one by greedy
// descent over the 2(m-1) generators, using the total reference-line crossing
// count as potential, with a plateau lookahead of depth m.
RelaxResult relax(const LamCoords& c, long long budget = 100000);

// Certified kappa with norm(sigma_action(c,k,s)) <= 2^kappa * norm(c) for all
// integer coordinate vectors; independent of m.
Rat growth_constant(int m);

// Dump format: "m a_1 ... a_{m-2} b_1 ... b_{m-2}".
std::string lam_dump(const LamCoords& c);
LamCoords lam_parse(const std::string& line);

// Internal quantities exposed for audits: crossings of gap line 1 for the taut
// representative, and the total crossing count with all reference lines.
Int beta_one(const LamCoords& c);
Int total_crossings(const LamCoords& c);

}  // namespace artifact

#endif
