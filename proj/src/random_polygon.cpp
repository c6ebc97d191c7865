#include "relcheb/random_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relcheb {

namespace {

constexpr int kMaxTries = 200000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Point> star_points(Rng& rng, std::size_t n, double r_lo, double r_hi) {
  std::vector<double> angles(n);
  for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
  std::sort(angles.begin(), angles.end());
  std::vector<Point> pts;
  pts.reserve(n);
  for (double a : angles) {
    const double r = rng.uniform(r_lo, r_hi);
    pts.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return pts;
}

// Monotone chain, strict turns only.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return {};
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-9) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-9) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

ConvexPolygon random_convex_polygon(Rng& rng, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NOutOfRange, "polygon needs n >= 2");
  if (n == 2) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      Point a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      Point b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      if (dist(a, b) > 0.2) return validate_convex_polygon({a, b});
    }
  } else {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      try {
        return validate_convex_polygon(star_points(rng, n, 0.6, 1.0));
      } catch (const Error&) {
        // star was not in convex position, resample
      }
    }
  }
  throw Error(ErrorCode::NoFeasibleStart,
              "could not sample a convex " + std::to_string(n) + "-gon");
}

ConvexPolygon random_convex_polygon_up_to(Rng& rng, std::size_t max_n) {
  if (max_n < 3) throw Error(ErrorCode::NOutOfRange, "need max_n >= 3");
  for (int tries = 0; tries < kMaxTries; ++tries) {
    std::vector<Point> hull = convex_hull(star_points(rng, max_n, 0.3, 1.0));
    if (hull.size() < 3) continue;
    try {
      return validate_convex_polygon(std::move(hull));
    } catch (const Error&) {
      // borderline collinear hull, resample
    }
  }
  throw Error(ErrorCode::NoFeasibleStart, "could not sample a convex polygon");
}

ConvexPolygon triangle_from_angles(double alpha, double beta, double gamma,
                                   TriangleSides* sides) {
  const double c_over_a = std::sin(gamma) / std::sin(alpha);
  Point b_vertex(0.0, 0.0);
  Point c_vertex(1.0, 0.0);
  Point a_vertex(c_over_a * std::cos(beta), c_over_a * std::sin(beta));
  ConvexPolygon tri = validate_convex_polygon({b_vertex, c_vertex, a_vertex});
  if (sides) {
    double s[3] = {dist(b_vertex, c_vertex), dist(a_vertex, c_vertex), dist(a_vertex, b_vertex)};
    std::sort(s, s + 3, std::greater<>());
    *sides = {s[0], s[1], s[2]};
  }
  return tri;
}

ConvexPolygon random_triangle(Rng& rng, TriangleSides* sides) {
  const double pi = std::numbers::pi;
  double alpha, beta, gamma;
  switch (rng.uniform_index(3)) {
    case 0: {  // obtuse: alpha >= pi/2
      alpha = rng.uniform(pi / 2, 3.0);
      const double rem = pi - alpha;
      beta = rng.uniform(rem / 2, rem * 0.999);
      gamma = rem - beta;
      break;
    }
    case 1: {  // gamma >= pi/4
      gamma = rng.uniform(pi / 4, pi / 3);
      beta = rng.uniform(gamma, (pi - gamma) / 2);
      alpha = pi - beta - gamma;
      break;
    }
    default: {  // gamma <= pi/4 and alpha <= pi/2
      gamma = rng.uniform(0.05, pi / 4);
      beta = rng.uniform(pi / 2 - gamma, pi / 2 - gamma / 2);
      alpha = pi - beta - gamma;
      break;
    }
  }
  return triangle_from_angles(alpha, beta, gamma, sides);
}

ConvexPolygon boundary_case_triangle(Rng& rng, int which, TriangleSides* sides) {
  const double pi = std::numbers::pi;
  double alpha, beta, gamma;
  if (which == 0) {  // alpha within 1e-6 of pi/2
    alpha = pi / 2 + rng.uniform(-1e-6, 1e-6);
    gamma = rng.uniform(0.2, pi / 4 - 1e-5);
    beta = pi - alpha - gamma;
  } else {  // gamma within 1e-6 of pi/4
    gamma = pi / 4 + rng.uniform(-1e-6, 1e-6);
    beta = rng.uniform(gamma + 1e-4, (pi - gamma) / 2);
    alpha = pi - beta - gamma;
  }
  return triangle_from_angles(alpha, beta, gamma, sides);
}

}  // namespace relcheb
