#pragma once

#include <cstddef>
#include <vector>

#include "relcheb/geometry.hpp"

namespace relcheb {

// Farthest-distance value at a boundary point. For a polygon the maximum
// over the curve is attained at a vertex, so footpoints are vertex indices.
struct MuResult {
  double value;
  std::vector<std::size_t> footpoints;  // all vertices attaining the max
  Point query_point;
};

// mu(x) = max distance from x to the polygon. Requires x on the boundary
// (within 1e-9 of some edge relative to the diameter); throws
// PointNotOnBoundary otherwise.
MuResult mu(const ConvexPolygon& poly, Point x);

struct EdgeMin {
  double t;      // minimizer parameter on the edge
  double value;  // mu at the minimizer
};

// Global minimum of mu restricted to the closed edge. mu^2 along an edge is
// a common quadratic plus the upper envelope of one line per vertex, hence
// convex; the minimizer is an endpoint, an envelope breakpoint, or the
// clamped foot of the active vertex's perpendicular. All such candidates are
// enumerated, so the result is exact up to floating point. Ties go to the
// smaller t.
EdgeMin edge_min_mu(const ConvexPolygon& poly, std::size_t edge_index);

struct ExtremalPoint {
  std::size_t edge;
  double t;
  Point point;
  std::vector<std::size_t> footpoints;  // distinguished chords [point, vertex]
};

struct ChebyshevResult {
  double radius;  // delta(P): min over the boundary of mu
  std::vector<ExtremalPoint> extremal_points;  // ordered by (edge, t)
};

// Relative Chebyshev radius of the polygon with respect to itself: the
// smallest disk covering P whose center lies on P. Extremal points within
// 1e-9 * diameter of the minimum are all reported, deduplicated by point
// distance.
ChebyshevResult delta(const ConvexPolygon& poly);

enum class TriangleCase {
  HalfDiameter,   // alpha >= pi/2:              a/2
  Altitude,       // gamma >= pi/4:              b*sin(gamma)
  IsoscelesChord, // gamma <= pi/4, alpha <= pi/2: b/(2*cos(gamma))
};

struct TriangleDelta {
  double value;
  TriangleCase which;
};

// Closed-form radius of a triangle with side lengths a >= b >= c (re-sorted
// defensively). The three cases agree where they meet, so the predicates are
// evaluated with plain comparisons. Throws DegenerateTriangle.
TriangleDelta delta_triangle_case(double a, double b, double c);
double delta_triangle(double a, double b, double c);

// Sampling lower-fidelity route for cross-checks: min of mu over a uniform
// grid with samples_per_edge points per edge (both endpoints included).
// Overestimates delta by at most max_edge_length / samples_per_edge.
double delta_brute(const ConvexPolygon& poly, std::size_t samples_per_edge);

}  // namespace relcheb
