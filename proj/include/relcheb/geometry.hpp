#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "relcheb/error.hpp"

namespace relcheb {

// Relative tolerance used by polygon validation. Cross products and
// distances are compared against this after scaling the polygon to unit
// diameter.
inline constexpr double kValidationEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py))
      throw Error(ErrorCode::NonFinite, "point coordinates must be finite");
  }
};

inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(Point a, Point b) { return std::sqrt(dist2(a, b)); }

// Cross product of (a - o) and (b - o); positive for a left turn.
inline double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Ordered vertex cycle of a strictly convex polygon, normalized to
// counterclockwise orientation. n == 2 is a valid degenerate polygon
// (a segment); its perimeter counts both traversals of the segment.
// Instances are immutable after construction.
class ConvexPolygon {
 public:
  std::size_t size() const { return verts_.size(); }
  // Edge i joins vertex i to vertex (i+1) mod n; a 2-gon has two edges.
  std::size_t edge_count() const { return verts_.size(); }

  const Point& operator[](std::size_t i) const { return verts_[i]; }
  const std::vector<Point>& vertices() const { return verts_; }

  double diameter() const { return diam_; }
  std::pair<std::size_t, std::size_t> diameter_pair() const { return diam_pair_; }

  friend ConvexPolygon validate_convex_polygon(std::vector<Point> points);

 private:
  ConvexPolygon(std::vector<Point> v, double diam, std::pair<std::size_t, std::size_t> dp)
      : verts_(std::move(v)), diam_(diam), diam_pair_(dp) {}

  std::vector<Point> verts_;
  double diam_;
  std::pair<std::size_t, std::size_t> diam_pair_;
};

// Validates and normalizes a vertex cycle. The vertex that starts the
// input cycle stays at index 0; orientation is flipped to CCW if needed.
// Throws: TooFewVertices, NonFinite, DuplicateVertex, NotConvex.
ConvexPolygon validate_convex_polygon(std::vector<Point> points);

// Sum of side lengths including the closing edge. For a 2-gon this is
// twice the segment length.
double perimeter(const ConvexPolygon& poly);

struct Diameter {
  double length;
  std::size_t i;
  std::size_t j;
};

// Maximal vertex-pair distance; ties resolved toward the
// lexicographically smallest index pair.
Diameter diameter(const ConvexPolygon& poly);

// Affine interpolation along edge `edge_index` at parameter t in [0,1].
Point edge_point(const ConvexPolygon& poly, std::size_t edge_index, double t);

}  // namespace relcheb
