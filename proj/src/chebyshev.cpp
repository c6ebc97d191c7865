#include "relcheb/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace relcheb {

namespace {

// mu exactly at a point: track squared distances, one sqrt at the end.
double exact_mu_at(const ConvexPolygon& poly, Point x) {
  double best = 0.0;
  for (const Point& v : poly.vertices()) best = std::max(best, dist2(x, v));
  return std::sqrt(best);
}

struct Line {
  double slope;
  double icept;
};

struct Cand {
  std::size_t edge;
  double t;
  double val2;  // envelope value of mu^2 at t
};

// Along edge e with endpoints p, q and direction d = q - p,
//   |p + t*d - w|^2 = |d|^2 t^2 + 2 dot(d, p - w) t + |p - w|^2,
// so mu^2(t) = |d|^2 t^2 + upper envelope of one line per vertex w.
// Candidates for the minimum over [0,1]: interval endpoints, envelope
// breakpoints, and the in-piece vertex-projection feet.
void scan_edge(const ConvexPolygon& poly, std::size_t e, std::vector<Cand>& out) {
  const std::size_t n = poly.size();
  const Point p = poly[e];
  const Point q = poly[(e + 1) % n];
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double len2 = dx * dx + dy * dy;

  static thread_local std::vector<Line> lines;
  lines.clear();
  lines.reserve(n);
  for (const Point& w : poly.vertices()) {
    const double rx = p.x - w.x;
    const double ry = p.y - w.y;
    lines.push_back({2.0 * (dx * rx + dy * ry), rx * rx + ry * ry});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.icept < b.icept);
  });

  // Upper envelope via monotone stack; lines arrive in increasing slope.
  static thread_local std::vector<Line> env;
  env.clear();
  auto isect = [](const Line& a, const Line& b) {
    return (a.icept - b.icept) / (b.slope - a.slope);
  };
  for (const Line& ln : lines) {
    if (!env.empty() && env.back().slope == ln.slope) {
      if (ln.icept <= env.back().icept) continue;
      env.pop_back();
    }
    while (env.size() >= 2 &&
           isect(env[env.size() - 2], ln) <= isect(env[env.size() - 2], env.back()))
      env.pop_back();
    env.push_back(ln);
  }

  auto val2_at = [&](const Line& ln, double t) {
    return len2 * t * t + ln.slope * t + ln.icept;
  };

  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < env.size(); ++i) {
    const double piece_lo = (i == 0) ? -inf : isect(env[i - 1], env[i]);
    const double piece_hi = (i + 1 == env.size()) ? inf : isect(env[i], env[i + 1]);
    const double lo = std::max(piece_lo, 0.0);
    const double hi = std::min(piece_hi, 1.0);
    if (!(lo <= hi)) continue;
    out.push_back({e, lo, val2_at(env[i], lo)});
    if (hi > lo) out.push_back({e, hi, val2_at(env[i], hi)});
    const double t_star = -env[i].slope / (2.0 * len2);  // projection foot
    if (t_star > lo && t_star < hi) out.push_back({e, t_star, val2_at(env[i], t_star)});
  }
}

}  // namespace

MuResult mu(const ConvexPolygon& poly, Point x) {
  const std::size_t n = poly.size();
  const double tol = 1e-9 * poly.diameter();

  double best_edge_dist = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < n; ++e) {
    const Point& p = poly[e];
    const Point& q = poly[(e + 1) % n];
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double len2 = dx * dx + dy * dy;
    double t = ((x.x - p.x) * dx + (x.y - p.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Point proj(p.x + t * dx, p.y + t * dy);
    best_edge_dist = std::min(best_edge_dist, dist(x, proj));
  }
  if (best_edge_dist > tol)
    throw Error(ErrorCode::PointNotOnBoundary, "query point is not on the polygon boundary");

  MuResult result;
  result.query_point = x;
  result.value = exact_mu_at(poly, x);
  for (std::size_t i = 0; i < n; ++i)
    if (dist(x, poly[i]) >= result.value - tol) result.footpoints.push_back(i);
  return result;
}

EdgeMin edge_min_mu(const ConvexPolygon& poly, std::size_t edge_index) {
  if (edge_index >= poly.edge_count())
    throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(edge_index));
  std::vector<Cand> cands;
  scan_edge(poly, edge_index, cands);
  const Cand* best = &cands.front();
  for (const Cand& c : cands)
    if (c.val2 < best->val2 || (c.val2 == best->val2 && c.t < best->t)) best = &c;
  return {best->t, exact_mu_at(poly, edge_point(poly, edge_index, best->t))};
}

ChebyshevResult delta(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  const double diam = poly.diameter();

  std::vector<Cand> cands;
  for (std::size_t e = 0; e < n; ++e) scan_edge(poly, e, cands);

  double min_env = std::numeric_limits<double>::infinity();
  for (const Cand& c : cands) min_env = std::min(min_env, c.val2);

  // Loose prefilter on envelope values, then exact evaluation of survivors.
  const double prefilter = std::sqrt(min_env) + 1e-7 * diam;
  struct Exact {
    std::size_t edge;
    double t;
    Point point;
    double value;
  };
  std::vector<Exact> exact;
  for (const Cand& c : cands) {
    if (std::sqrt(c.val2) > prefilter) continue;
    const Point pt = edge_point(poly, c.edge, c.t);
    exact.push_back({c.edge, c.t, pt, exact_mu_at(poly, pt)});
  }

  double radius = std::numeric_limits<double>::infinity();
  for (const Exact& x : exact) radius = std::min(radius, x.value);

  const double tol = 1e-9 * diam;
  std::vector<Exact> near;
  for (const Exact& x : exact)
    if (x.value <= radius + tol) near.push_back(x);

  // Deduplicate by position, best value first so each cluster keeps its
  // sharpest representative.
  std::sort(near.begin(), near.end(), [](const Exact& a, const Exact& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.t < b.t;
  });
  std::vector<Exact> kept;
  for (const Exact& x : near) {
    bool dup = false;
    for (const Exact& k : kept)
      if (dist(x.point, k.point) < tol) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end(), [](const Exact& a, const Exact& b) {
    return a.edge < b.edge || (a.edge == b.edge && a.t < b.t);
  });

  ChebyshevResult result;
  result.radius = radius;
  for (const Exact& x : kept) {
    ExtremalPoint ep;
    ep.edge = x.edge;
    ep.t = x.t;
    ep.point = x.point;
    for (std::size_t i = 0; i < n; ++i)
      if (dist(x.point, poly[i]) >= x.value - tol) ep.footpoints.push_back(i);
    result.extremal_points.push_back(std::move(ep));
  }
  return result;
}

TriangleDelta delta_triangle_case(double a, double b, double c) {
  double s[3] = {a, b, c};
  std::sort(s, s + 3, std::greater<>());
  a = s[0];
  b = s[1];
  c = s[2];
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
    throw Error(ErrorCode::DegenerateTriangle, "sides must be finite");
  if (c <= 0.0 || b + c <= a)
    throw Error(ErrorCode::DegenerateTriangle, "sides violate the triangle inequality");

  const double cos_alpha = (b * b + c * c - a * a) / (2.0 * b * c);
  const double cos_gamma = (a * a + b * b - c * c) / (2.0 * a * b);
  // The adjacent formulas agree at both case boundaries, so plain
  // comparisons are enough here.
  if (cos_alpha <= 0.0) return {a / 2.0, TriangleCase::HalfDiameter};
  if (cos_gamma <= std::numbers::sqrt2 / 2.0) {
    const double sin_gamma = std::sqrt(1.0 - cos_gamma * cos_gamma);
    return {b * sin_gamma, TriangleCase::Altitude};
  }
  return {b / (2.0 * cos_gamma), TriangleCase::IsoscelesChord};
}

double delta_triangle(double a, double b, double c) {
  return delta_triangle_case(a, b, c).value;
}

double delta_brute(const ConvexPolygon& poly, std::size_t samples_per_edge) {
  if (samples_per_edge < 2)
    throw Error(ErrorCode::ParameterOutOfRange, "need at least 2 samples per edge");
  const std::size_t n = poly.size();
  const std::vector<Point>& verts = poly.vertices();
  double best2 = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < n; ++e) {
    const Point& p = verts[e];
    const Point& q = verts[(e + 1) % n];
    const double step = 1.0 / static_cast<double>(samples_per_edge - 1);
    for (std::size_t j = 0; j < samples_per_edge; ++j) {
      const double t = static_cast<double>(j) * step;
      const double x = (1.0 - t) * p.x + t * q.x;
      const double y = (1.0 - t) * p.y + t * q.y;
      double worst = 0.0;
      for (const Point& v : verts) {
        const double ddx = x - v.x;
        const double ddy = y - v.y;
        worst = std::max(worst, ddx * ddx + ddy * ddy);
      }
      best2 = std::min(best2, worst);
    }
  }
  return std::sqrt(best2);
}

}  // namespace relcheb
