#pragma once

#include <string>

#include "relcheb/chebyshev.hpp"
#include "relcheb/geometry.hpp"

namespace relcheb {

// Sharp constant in L(P) <= lambda_n * delta(P) for convex n-gons:
// lambda_n = 2*(1 + (n-1)*sin(pi/(2*(n-1)))). Strictly increasing, tends to
// 2 + pi. Throws NOutOfRange for n < 2.
double lambda_value(long long n);

// The extremal n-gon U_n of radius r: the diameter segment (-r,0)-(r,0)
// plus half of a regular 2(n-1)-gon inscribed in the upper half-circle.
// Its perimeter is lambda_n * r and its relative Chebyshev radius is r,
// attained only at the base midpoint. U_2 is the bare segment.
ConvexPolygon build_U_n(long long n, double r);

// Polyline approximation of a half-disk boundary of radius r with m arc
// segments; identical to build_U_n(m+1, r).
ConvexPolygon half_disk_polyline(double r, long long m);

// The quadrangle conjectured to minimize L/delta among convex quadrangles:
// vertices (-1,0), (0,-sqrt(2*sqrt(3)-3)/3), (1,0), (0, sqrt(2*sqrt(3)+3)/sqrt(3)).
ConvexPolygon magic_kite();

class Bound {
 public:
  enum class Kind { TriangleLower, NgonUpper, CurveUpper, QuadrangleConjecture };

  static Bound triangle_lower() { return Bound(Kind::TriangleLower, 0); }
  static Bound ngon_upper(long long n) { return Bound(Kind::NgonUpper, n); }
  static Bound curve_upper() { return Bound(Kind::CurveUpper, 0); }
  static Bound quadrangle_conjecture() { return Bound(Kind::QuadrangleConjecture, 0); }

  Kind kind() const { return kind_; }
  long long n() const { return n_; }
  // The constant the ratio is compared against.
  double value() const;
  // Lower bounds require ratio >= value; upper bounds require ratio <= value.
  bool is_lower() const;
  // True for bounds that are conjectured rather than proved.
  bool is_conjectural() const { return kind_ == Kind::QuadrangleConjecture; }
  std::string name() const;

 private:
  Bound(Kind kind, long long n) : kind_(kind), n_(n) {}
  Kind kind_;
  long long n_;
};

struct RatioReport {
  ConvexPolygon polygon;
  double perimeter;
  double radius;      // delta
  double ratio;       // perimeter / radius
  Bound bound;
  double bound_value;
  bool satisfied;     // signed comparison with zero tolerance
  double slack;       // >= 0 iff satisfied; raw, bound-side signed gap
};

// Evaluates L/delta of the polygon against the requested bound. Throws
// BoundNotApplicable when the polygon's vertex count does not fit the bound
// (TriangleLower needs n=3, QuadrangleConjecture n=4, NgonUpper(n) needs
// size <= n).
RatioReport ratio_report(const ConvexPolygon& poly, Bound bound);

}  // namespace relcheb
