#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "relcheb/geometry.hpp"

namespace testutil {

inline relcheb::ConvexPolygon make_poly(std::initializer_list<std::pair<double, double>> pts) {
  std::vector<relcheb::Point> v;
  for (auto [x, y] : pts) v.emplace_back(x, y);
  return relcheb::validate_convex_polygon(std::move(v));
}

inline relcheb::ConvexPolygon unit_square() {
  return make_poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// brute-force diameter over all vertex pairs, lexicographic tie-break
struct BrutePair {
  double length;
  std::size_t i, j;
};

inline BrutePair brute_diameter(const relcheb::ConvexPolygon& p) {
  BrutePair best{-1.0, 0, 0};
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const double d = relcheb::dist(p[i], p[j]);
      if (d > best.length) best = {d, i, j};
    }
  return best;
}

// dense-scan oracle for the minimum of mu along one edge
inline double scan_edge_min(const relcheb::ConvexPolygon& p, std::size_t edge,
                            std::size_t samples) {
  const relcheb::Point a = p[edge];
  const relcheb::Point b = p[(edge + 1) % p.size()];
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
    const relcheb::Point x((1 - t) * a.x + t * b.x, (1 - t) * a.y + t * b.y);
    double worst = 0.0;
    for (const relcheb::Point& v : p.vertices()) worst = std::max(worst, relcheb::dist2(x, v));
    best = std::min(best, worst);
  }
  return std::sqrt(best);
}

inline relcheb::ConvexPolygon transformed(const relcheb::ConvexPolygon& p, double angle,
                                          double tx, double ty, bool reflect,
                                          double scale = 1.0) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<relcheb::Point> out;
  for (const relcheb::Point& v : p.vertices()) {
    double x = reflect ? -v.x : v.x;
    double y = v.y;
    out.emplace_back(scale * (c * x - s * y) + tx, scale * (s * x + c * y) + ty);
  }
  return relcheb::validate_convex_polygon(std::move(out));
}

}  // namespace testutil
