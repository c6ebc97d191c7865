#include "relcheb/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "relcheb/chebyshev.hpp"
#include "relcheb/random_polygon.hpp"
#include "relcheb/rng.hpp"

namespace relcheb {

namespace {

constexpr double kPenaltyBase = 1e6;
constexpr double kConvexTau = 1e-7;   // min cross product treated as convex
constexpr double kInf = std::numeric_limits<double>::infinity();

struct EvalOut {
  double penalized;    // value Nelder-Mead minimizes
  bool feasible;       // candidate satisfies the exact constraints
  double true_value;   // report-space objective (only valid when feasible)
};

struct NmOutcome {
  std::vector<double> x;
  double fx;
  bool converged;
};

// Plain Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5) from an axis-aligned initial simplex of the given step.
NmOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                      std::vector<double> x0, double step, int max_iter, double ftol) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fs[i] = f(xs[i]);

  std::vector<std::size_t> order(dim + 1);
  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order[0];
    const std::size_t second_worst = order[dim - 1];
    const std::size_t worst = order[dim];
    if (std::abs(fs[worst] - fs[best]) <= ftol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += xs[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double coef) {
      std::vector<double> p(dim);
      for (std::size_t i = 0; i < dim; ++i)
        p[i] = centroid[i] + coef * (centroid[i] - xs[worst][i]);
      return p;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fs[best]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        xs[worst] = std::move(xe);
        fs[worst] = fe;
      } else {
        xs[worst] = std::move(xr);
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = std::move(xr);
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      std::vector<double> xc = blend(outside ? 0.5 : -0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fs[worst])) {
        xs[worst] = std::move(xc);
        fs[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= dim; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < dim; ++i)
            xs[k][i] = xs[best][i] + 0.5 * (xs[k][i] - xs[best][i]);
          fs[k] = f(xs[k]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (fs[i] < fs[best]) best = i;
  return {xs[best], fs[best], converged};
}

struct ProblemDef {
  std::size_t dim;
  bool maximize;
  std::function<EvalOut(const std::vector<double>&)> eval;
  std::function<std::vector<double>(Rng&)> make_start;
  std::function<ConvexPolygon(const std::vector<double>&)> build;
};

// Multi-restart driver. Each restart runs several Nelder-Mead rounds,
// re-seeding the simplex at the incumbent with a shrinking step; that
// recovers from collapsed simplexes near the kinks of the ratio landscape.
SearchResult run_restarts(const SearchConfig& cfg, const ProblemDef& prob,
                          std::optional<std::vector<double>> start0) {
  if (cfg.restarts < 1)
    throw Error(ErrorCode::ParameterOutOfRange, "restarts must be >= 1");

  constexpr int kRounds = 8;
  constexpr double kStep0 = 0.15;
  constexpr double kStepShrink = 0.45;
  const int iters_per_round = std::max(100, cfg.max_iterations_per_restart / kRounds);

  long long evaluations = 0;
  int converged_restarts = 0;
  std::vector<double> per_restart;
  per_restart.reserve(static_cast<std::size_t>(cfg.restarts));
  const double worst_value = prob.maximize ? -kInf : kInf;
  double global_best = worst_value;
  std::vector<double> global_best_x;
  auto better = [&](double a, double b) { return prob.maximize ? a > b : a < b; };

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(r));

    double restart_best = worst_value;
    std::vector<double> restart_best_x;
    auto f = [&](const std::vector<double>& x) {
      const EvalOut out = prob.eval(x);
      ++evaluations;
      if (out.feasible && better(out.true_value, restart_best)) {
        restart_best = out.true_value;
        restart_best_x = x;
      }
      return out.penalized;
    };

    std::vector<double> x;
    bool started = false;
    if (r == 0 && start0) {
      x = *start0;
      started = true;
    } else {
      for (int tries = 0; tries < 200 && !started; ++tries) {
        x = prob.make_start(rng);
        started = f(x) < kPenaltyBase;
      }
    }
    if (!started) {
      per_restart.push_back(worst_value);
      continue;
    }

    bool converged = false;
    double step = kStep0;
    for (int round = 0; round < kRounds; ++round) {
      NmOutcome out = nelder_mead(f, x, step, iters_per_round, cfg.simplex_tolerance);
      x = std::move(out.x);
      converged = out.converged;
      step *= kStepShrink;
    }
    if (converged) ++converged_restarts;

    per_restart.push_back(restart_best);
    if (!restart_best_x.empty() && better(restart_best, global_best)) {
      global_best = restart_best;
      global_best_x = std::move(restart_best_x);
    }
  }

  if (global_best_x.empty())
    throw Error(ErrorCode::NoFeasibleStart, "no restart reached a feasible polygon");

  return {prob.build(global_best_x), global_best, std::move(per_restart), evaluations,
          converged_restarts};
}

std::vector<Point> quad_vertices(const std::vector<double>& x) {
  return {Point(-0.5, 0.0), Point(x[0], x[1]), Point(0.5, 0.0), Point(x[2], x[3])};
}

std::vector<Point> ngon_vertices(long long n, const std::vector<double>& x) {
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(n));
  v.emplace_back(-0.5, 0.0);
  v.emplace_back(0.5, 0.0);
  for (long long i = 0; i < n - 2; ++i) v.emplace_back(x[2 * i], x[2 * i + 1]);
  return v;
}

// Convexity violation of a raw vertex cycle plus a soft coordinate cap.
double convexity_violation(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  double viol = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cross(v[i], v[(i + 1) % n], v[(i + 2) % n]);
    if (c < kConvexTau) viol += (kConvexTau - c) * (kConvexTau - c);
  }
  for (const Point& p : v) {
    const double m = std::max(std::abs(p.x), std::abs(p.y));
    if (m > 100.0) viol += (m - 100.0) * (m - 100.0);
  }
  return viol;
}

double ratio_of(const std::vector<Point>& verts) {
  ConvexPolygon poly = validate_convex_polygon(verts);
  return perimeter(poly) / delta(poly).radius;
}

EvalOut ratio_eval(const std::vector<Point>& verts, bool maximize, double penalty_weight) {
  const double viol = convexity_violation(verts);
  if (viol > 0.0) return {kPenaltyBase + penalty_weight * viol, false, 0.0};
  const double ratio = ratio_of(verts);
  return {maximize ? -ratio : ratio, true, ratio};
}

// Similarity that maps the diagonal (q[0], q[2]) onto (-1/2,0)-(1/2,0).
std::vector<double> quad_params_from(const ConvexPolygon& q) {
  const Point w0 = q[0], w2 = q[2];
  const double mx = (w0.x + w2.x) / 2.0, my = (w0.y + w2.y) / 2.0;
  const double hx = w2.x - mx, hy = w2.y - my;  // half-diagonal
  const double h2 = hx * hx + hy * hy;
  auto map = [&](const Point& p) {
    const double px = p.x - mx, py = p.y - my;
    return Point((px * hx + py * hy) / (2.0 * h2), (hx * py - hy * px) / (2.0 * h2));
  };
  const Point a = map(q[1]), b = map(q[3]);
  return {a.x, a.y, b.x, b.y};
}

}  // namespace

SearchResult minimize_quadrangle_ratio(const SearchConfig& config,
                                       std::optional<ConvexPolygon> start) {
  ProblemDef prob;
  prob.dim = 4;
  prob.maximize = false;
  prob.eval = [&config](const std::vector<double>& x) {
    return ratio_eval(quad_vertices(x), false, config.penalty_weight);
  };
  prob.make_start = [](Rng& rng) {
    const double x1 = rng.uniform(-0.35, 0.35);
    const double y1 = -rng.uniform(0.08, 0.9);
    const double x3 = rng.uniform(-0.35, 0.35);
    const double y3 = rng.uniform(0.08, 0.9);
    return std::vector<double>{x1, y1, x3, y3};
  };
  prob.build = [](const std::vector<double>& x) {
    return validate_convex_polygon(quad_vertices(x));
  };

  std::optional<std::vector<double>> x0;
  if (start) {
    if (start->size() != 4)
      throw Error(ErrorCode::BoundNotApplicable, "start polygon must be a quadrangle");
    x0 = quad_params_from(*start);
  }
  return run_restarts(config, prob, std::move(x0));
}

SearchResult maximize_ngon_ratio(long long n, const SearchConfig& config) {
  if (n < 3) throw Error(ErrorCode::NOutOfRange, "n-gon search needs n >= 3");
  ProblemDef prob;
  prob.dim = static_cast<std::size_t>(2 * (n - 2));
  prob.maximize = true;
  prob.eval = [n, &config](const std::vector<double>& x) {
    return ratio_eval(ngon_vertices(n, x), true, config.penalty_weight);
  };
  prob.make_start = [n](Rng& rng) {
    // points above the pinned edge, CCW by ascending angle
    std::vector<double> angles(static_cast<std::size_t>(n - 2));
    for (double& a : angles) a = rng.uniform(0.08, std::numbers::pi - 0.08);
    std::sort(angles.begin(), angles.end());
    std::vector<double> x;
    x.reserve(2 * angles.size());
    for (double a : angles) {
      const double rad = rng.uniform(0.3, 0.55);
      x.push_back(rad * std::cos(a));
      x.push_back(rad * std::sin(a));
    }
    return x;
  };
  prob.build = [n](const std::vector<double>& x) {
    return validate_convex_polygon(ngon_vertices(n, x));
  };
  return run_restarts(config, prob, std::nullopt);
}

CnlCheck check_cnl_property(const ConvexPolygon& poly, double l) {
  const std::size_t n = poly.size();
  if (n < 3) throw Error(ErrorCode::NOutOfRange, "property needs n >= 3");
  if (!(l > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "l must be positive");

  const double diam = poly.diameter();
  const double dedup_tol = 1e-9 * diam;

  CnlCheck result;
  result.holds = true;
  result.sides.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const Point mid((a.x + b.x) / 2.0, (a.y + b.y) / 2.0);
    const double nx = -(b.y - a.y);
    const double ny = b.x - a.x;  // bisector direction
    const double nlen = std::hypot(nx, ny);

    std::vector<Point> hits;
    for (std::size_t j = 0; j < n; ++j) {
      const Point& p = poly[j];
      const Point& q = poly[(j + 1) % n];
      const double ex = q.x - p.x;
      const double ey = q.y - p.y;
      // mid + s*(nx,ny) = p + u*(ex,ey)
      const double det = nx * (-ey) + ex * ny;
      if (std::abs(det) <= 1e-14 * nlen * std::hypot(ex, ey)) continue;
      const double rx = p.x - mid.x;
      const double ry = p.y - mid.y;
      const double u = (nx * ry - ny * rx) / det;
      if (u < -1e-12 || u > 1.0 + 1e-12) continue;
      const double uc = std::clamp(u, 0.0, 1.0);
      Point c(p.x + uc * ex, p.y + uc * ey);
      bool dup = false;
      for (const Point& h : hits)
        if (dist(h, c) < dedup_tol) {
          dup = true;
          break;
        }
      if (!dup) hits.push_back(c);
    }

    CnlSideWitness w{false, mid, 0.0};
    for (const Point& c : hits) {
      const double d = dist(a, c);
      if (d > w.distance) w = {false, c, d};
    }
    w.holds = w.distance >= l - 1e-12;
    result.holds = result.holds && w.holds;
    result.sides.push_back(w);
  }
  return result;
}

SearchResult min_perimeter_cnl(long long n, double l, const SearchConfig& config) {
  if (n < 3) throw Error(ErrorCode::NOutOfRange, "perimeter search needs n >= 3");
  if (!(l > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "l must be positive");

  // Unit problem: each candidate is rescaled so its smallest equidistant
  // distance is exactly 1 (plus a hair of margin), which keeps every
  // evaluation feasible and the objective smooth.
  constexpr double kMargin = 1.0 + 1e-9;
  const std::size_t dim = static_cast<std::size_t>(2 * n - 3);

  auto unit_vertices = [n](const std::vector<double>& x) {
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(n));
    v.emplace_back(0.0, 0.0);
    v.emplace_back(x[0], 0.0);
    for (long long i = 0; i < n - 2; ++i) v.emplace_back(x[2 * i + 1], x[2 * i + 2]);
    return v;
  };

  ProblemDef prob;
  prob.dim = dim;
  prob.maximize = false;
  prob.eval = [&, n](const std::vector<double>& x) -> EvalOut {
    std::vector<Point> v = unit_vertices(x);
    double viol = convexity_violation(v);
    if (x[0] < kConvexTau) viol += (kConvexTau - x[0]) * (kConvexTau - x[0]);
    if (viol > 0.0) return {kPenaltyBase + config.penalty_weight * viol, false, 0.0};
    ConvexPolygon poly = validate_convex_polygon(v);
    const CnlCheck check = check_cnl_property(poly, 1.0);
    double dmin = kInf;
    for (const auto& side : check.sides) dmin = std::min(dmin, side.distance);
    if (!(dmin > 1e-9)) return {kPenaltyBase, false, 0.0};
    const double value = perimeter(poly) * (kMargin / dmin);
    return {value, true, value};
  };
  prob.make_start = [n](Rng& rng) {
    ConvexPolygon poly = random_convex_polygon(rng, static_cast<std::size_t>(n));
    // canonical pose: vertex 0 at the origin, vertex 1 on the +x axis
    const Point o = poly[0];
    const double ex = poly[1].x - o.x;
    const double ey = poly[1].y - o.y;
    const double elen = std::hypot(ex, ey);
    const double cx = ex / elen, cy = ey / elen;
    std::vector<double> x;
    x.reserve(2 * static_cast<std::size_t>(n) - 3);
    x.push_back(elen);
    for (std::size_t i = 2; i < poly.size(); ++i) {
      const double px = poly[i].x - o.x;
      const double py = poly[i].y - o.y;
      x.push_back(px * cx + py * cy);
      x.push_back(-px * cy + py * cx);
    }
    return x;
  };
  prob.build = [&, n](const std::vector<double>& x) {
    std::vector<Point> v = unit_vertices(x);
    ConvexPolygon unit = validate_convex_polygon(v);
    const CnlCheck check = check_cnl_property(unit, 1.0);
    double dmin = kInf;
    for (const auto& side : check.sides) dmin = std::min(dmin, side.distance);
    const double scale = l * kMargin / dmin;
    for (Point& p : v) p = Point(p.x * scale, p.y * scale);
    return validate_convex_polygon(std::move(v));
  };

  SearchResult result = run_restarts(config, prob, std::nullopt);
  // report in scaled units; scaling both sides the same way keeps
  // objective == min(per_restart_bests) bitwise
  result.objective *= l;
  for (double& v : result.per_restart_bests)
    if (std::isfinite(v)) v *= l;
  if (!check_cnl_property(result.best_polygon, l).holds)
    throw Error(ErrorCode::NoFeasibleStart, "search result failed the exact feasibility re-check");
  return result;
}

}  // namespace relcheb
