#ifndef ARTIFACT_RATIONAL_HPP
#define ARTIFACT_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>

namespace artifact {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" or "p" (decimal integers, optional sign). Returns nullopt on bad input.
std::optional<Rat> parse_rational(const std::string& s);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rat& r);

struct Point {
    Rat x, y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Rat dist2(const Point& a, const Point& b) { return dot(a - b, a - b); }

// Elements of the biquadratic field Q(sqrt(d1), sqrt(d2)):
//   v = a + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1*d2),
// with d1, d2 >= 0 rational. Supports the exact sign test needed to order
// circle-intersection points that involve two independent square roots.
struct Surd2 {
    Rat a, b, c, e;
    Rat d1, d2;
};

// Exact sign (-1, 0, +1) of a + b*sqrt(d), d >= 0.
int sign_surd1(const Rat& a, const Rat& b, const Rat& d);

// Exact sign of a Surd2 value.
int sign_surd2(const Surd2& v);

}  // namespace artifact

#endif
