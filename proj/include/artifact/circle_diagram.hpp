#ifndef ARTIFACT_CIRCLE_DIAGRAM_HPP
#define ARTIFACT_CIRCLE_DIAGRAM_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "artifact/graph.hpp"
#include "artifact/rational.hpp"

namespace artifact {

class DiagramError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class Tangency : public DiagramError {
  public:
    using DiagramError::DiagramError;
};
class TripleIntersection : public DiagramError {
  public:
    using DiagramError::DiagramError;
};
class OutsideDisk : public DiagramError {
  public:
    using DiagramError::DiagramError;
};
class DegenerateWidth : public DiagramError {
  public:
    using DiagramError::DiagramError;
};
class ConstructionFailed : public DiagramError {
  public:
    using DiagramError::DiagramError;
};

struct Circle {
    Point center;
    Rat r;
};

// Circles in general position strictly inside the unit disk.
struct CircleDiagram {
    std::vector<Circle> circles;
};

// Exact general-position checks: strictly inside the unit disk, no tangencies,
// every pairwise intersection transverse, no three circles through one point.
void validate(const CircleDiagram& d);

// Vertex per circle (labels c1..cn); edge iff the circles are disjoint
// (nested counts as disjoint).
Graph non_incidence_graph(const CircleDiagram& d);

struct Puncture {
    Point pos;
    enum Kind { AnnulusInner, AnnulusOuter, Face } kind;
    int circle;  // owning circle for annulus punctures, -1 for face punctures
};

// One intersection square per crossing point: the component of the annulus
// overlap around the crossing M + side*sqrt(h2)*perp, all data rational.
struct SquareInfo {
    int i, k;          // crossing circle pair, i < k
    Point radical_mid; // midpoint of the two crossing points
    Point perp;        // direction from the midpoint towards the crossings
    Rat h2;            // squared multiplier of perp
    int side;          // +1 or -1
};

struct SurfaceData {
    CircleDiagram diagram;
    Rat width;                       // annulus width delta
    std::vector<SquareInfo> squares; // two per crossing pair
    std::vector<Puncture> punctures; // sorted by strictly increasing x
    int m = 0;                       // punctures.size() = 2n + bounded faces
    int bounded_faces = 0;
    // indices into `punctures`
    std::vector<std::array<int, 2>> annulus_puncture_index;  // per circle {inner, outer}
    std::vector<int> face_puncture_index;                    // per bounded face
    std::vector<Point> base_points;  // per circle: rational point on the circle
                                     // where the puncture pair sits
};

// Chooses the annulus width by halving (floor 2^-32), enumerates the bounded
// faces of the arrangement exactly, and places all punctures with verified
// clearances and pairwise distinct x-coordinates.
SurfaceData build_surface(const CircleDiagram& d);

// Polygonal twisting curves, one triple per circle: C_i follows the circle,
// D_i is a parallel push-off past the inner annulus puncture, B_i bounds a
// thin box around the circle's two annulus punctures.
struct TwistCurveSet {
    std::vector<std::vector<Point>> B, C, D;
};

TwistCurveSet twist_curves(const SurfaceData& s);

// Builtins: single, crossing_pair, disjoint_pair, pentagon_c5, icosa.
CircleDiagram builtin_diagram(const std::string& name);

// {"circles": [{"cx": "p/q", "cy": "p/q", "r": "p/q"}, ...]}
std::string diagram_to_json(const CircleDiagram& d);
CircleDiagram diagram_from_json(const std::string& text);

}  // namespace artifact

#endif
