#include "relcheb/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace relcheb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::PointNotOnBoundary: return "PointNotOnBoundary";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NOutOfRange: return "NOutOfRange";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::BoundNotApplicable: return "BoundNotApplicable";
    case ErrorCode::NoFeasibleStart: return "NoFeasibleStart";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

namespace {

// Max pairwise distance with lexicographically smallest achieving pair.
Diameter max_pair_distance(const std::vector<Point>& v) {
  Diameter best{0.0, 0, 0};
  bool first = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double d = dist(v[i], v[j]);
      if (first || d > best.length) {
        best = {d, i, j};
        first = false;
      }
    }
  }
  return best;
}

double signed_area2(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

}  // namespace

ConvexPolygon validate_convex_polygon(std::vector<Point> points) {
  const std::size_t n = points.size();
  if (n < 2)
    throw Error(ErrorCode::TooFewVertices, "need at least 2 vertices, got " + std::to_string(n));
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::NonFinite, "vertex coordinates must be finite");
  }

  Diameter diam = max_pair_distance(points);
  if (diam.length <= 0.0)
    throw Error(ErrorCode::DuplicateVertex, "all vertices coincide");

  const double eps_dist = kValidationEps * diam.length;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(points[i], points[(i + 1) % n]) <= eps_dist)
      throw Error(ErrorCode::DuplicateVertex,
                  "consecutive vertices " + std::to_string(i) + " and " +
                      std::to_string((i + 1) % n) + " coincide");
  }

  if (n >= 3) {
    // Normalize to CCW, keeping the starting vertex at index 0.
    if (signed_area2(points) < 0.0)
      std::reverse(points.begin() + 1, points.end());

    const double eps_cross = kValidationEps * diam.length * diam.length;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = points[i];
      const Point& b = points[(i + 1) % n];
      const Point& c = points[(i + 2) % n];
      if (cross(a, b, c) <= eps_cross)
        throw Error(ErrorCode::NotConvex,
                    "vertices " + std::to_string(i) + "," + std::to_string((i + 1) % n) +
                        "," + std::to_string((i + 2) % n) + " are collinear or reflex");
    }
    // Vertex order changed if we reversed; recompute the achieving pair.
    diam = max_pair_distance(points);
  }

  return ConvexPolygon(std::move(points), diam.length, {diam.i, diam.j});
}

double perimeter(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += dist(poly[i], poly[(i + 1) % n]);
  return sum;
}

Diameter diameter(const ConvexPolygon& poly) {
  auto [i, j] = poly.diameter_pair();
  return {poly.diameter(), i, j};
}

Point edge_point(const ConvexPolygon& poly, std::size_t edge_index, double t) {
  if (edge_index >= poly.edge_count())
    throw Error(ErrorCode::IndexOutOfRange,
                "edge " + std::to_string(edge_index) + " of " + std::to_string(poly.edge_count()));
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorCode::ParameterOutOfRange, "t must lie in [0,1]");
  const Point& a = poly[edge_index];
  const Point& b = poly[(edge_index + 1) % poly.size()];
  // (1-t)a + tb hits both endpoints exactly.
  return Point((1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y);
}

}  // namespace relcheb
