#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relcheb/geometry.hpp"

namespace relcheb {

// Deterministic multi-restart Nelder-Mead configuration. Identical configs
// produce bitwise-identical results on the same build; restart i draws from
// the substream Rng::stream(seed, i) only, so restarts are order-independent.
struct SearchConfig {
  std::uint64_t seed = 1;
  int restarts = 16;
  int max_iterations_per_restart = 4800;
  double simplex_tolerance = 1e-12;
  double penalty_weight = 1e4;
};

struct SearchResult {
  ConvexPolygon best_polygon;
  double objective;
  std::vector<double> per_restart_bests;
  long long evaluations;
  int converged_restarts;
};

// Minimizes L(P)/delta(P) over convex quadrangles. Shape space: one diagonal
// pinned to (-1/2,0)-(1/2,0), the remaining two vertices free (4 parameters,
// similarity factored out); non-convex candidates are pushed back by a
// quadratic cross-product penalty. If `start` is given, restart 0 begins
// from it instead of a random quadrangle.
SearchResult minimize_quadrangle_ratio(const SearchConfig& config,
                                       std::optional<ConvexPolygon> start = std::nullopt);

// Maximizes L(P)/delta(P) over convex n-gons (n >= 3). Shape space: one edge
// pinned to (-1/2,0)-(1/2,0), the other n-2 vertices free (2n-4 parameters).
SearchResult maximize_ngon_ratio(long long n, const SearchConfig& config);

struct CnlSideWitness {
  bool holds;
  Point witness;     // boundary point equidistant from the side's endpoints
  double distance;   // d(A, witness) = d(B, witness)
};

struct CnlCheck {
  bool holds;  // conjunction over all sides
  std::vector<CnlSideWitness> sides;
};

// For every side [A,B]: intersect the perpendicular bisector of [A,B] with
// the polygon boundary and test whether some intersection point C has
// d(A,C) >= l - 1e-12. C is taken on the boundary curve.
CnlCheck check_cnl_property(const ConvexPolygon& poly, double l);

// Minimizes the perimeter over convex n-gons whose every side admits an
// equidistant boundary point at distance >= l. The search runs on the unit
// problem (l = 1) and scales the result by l, so results scale exactly with
// l. The reported polygon satisfies check_cnl_property by a post-hoc exact
// re-check; its perimeter is an upper estimate of the optimal constant.
SearchResult min_perimeter_cnl(long long n, double l, const SearchConfig& config);

}  // namespace relcheb
