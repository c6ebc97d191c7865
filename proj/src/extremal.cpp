#include "relcheb/extremal.hpp"

#include <cmath>
#include <numbers>

namespace relcheb {

double lambda_value(long long n) {
  if (n < 2) throw Error(ErrorCode::NOutOfRange, "lambda_n needs n >= 2");
  const double m = static_cast<double>(n - 1);
  return 2.0 * (1.0 + m * std::sin(std::numbers::pi / (2.0 * m)));
}

ConvexPolygon build_U_n(long long n, double r) {
  if (n < 2) throw Error(ErrorCode::NOutOfRange, "U_n needs n >= 2");
  if (!(r > 0.0)) throw Error(ErrorCode::NonPositiveRadius, "U_n needs r > 0");
  if (n == 2) return validate_convex_polygon({Point(-r, 0.0), Point(r, 0.0)});

  std::vector<Point> verts;
  verts.reserve(static_cast<std::size_t>(n));
  verts.emplace_back(r, 0.0);
  for (long long k = 1; k <= n - 2; ++k) {
    const double a = static_cast<double>(k) * std::numbers::pi / static_cast<double>(n - 1);
    verts.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  verts.emplace_back(-r, 0.0);
  return validate_convex_polygon(std::move(verts));
}

ConvexPolygon half_disk_polyline(double r, long long m) {
  if (m < 2) throw Error(ErrorCode::NOutOfRange, "half-disk polyline needs m >= 2");
  return build_U_n(m + 1, r);
}

ConvexPolygon magic_kite() {
  const double s3 = std::sqrt(3.0);
  const double top = (s3 / 3.0) * std::sqrt(2.0 * s3 + 3.0);
  const double bottom = std::sqrt(2.0 * s3 - 3.0) / 3.0;
  return validate_convex_polygon(
      {Point(-1.0, 0.0), Point(0.0, -bottom), Point(1.0, 0.0), Point(0.0, top)});
}

double Bound::value() const {
  switch (kind_) {
    case Kind::TriangleLower: return 2.0 * std::sqrt(3.0);
    case Kind::NgonUpper: return lambda_value(n_);
    case Kind::CurveUpper: return 2.0 + std::numbers::pi;
    case Kind::QuadrangleConjecture:
      return (4.0 / 3.0) * std::sqrt(2.0 * std::sqrt(3.0) + 3.0);
  }
  return 0.0;
}

bool Bound::is_lower() const {
  return kind_ == Kind::TriangleLower || kind_ == Kind::QuadrangleConjecture;
}

std::string Bound::name() const {
  switch (kind_) {
    case Kind::TriangleLower: return "TriangleLower";
    case Kind::NgonUpper: return "NgonUpper(" + std::to_string(n_) + ")";
    case Kind::CurveUpper: return "CurveUpper";
    case Kind::QuadrangleConjecture: return "QuadrangleConjecture";
  }
  return "?";
}

RatioReport ratio_report(const ConvexPolygon& poly, Bound bound) {
  const auto n = static_cast<long long>(poly.size());
  switch (bound.kind()) {
    case Bound::Kind::TriangleLower:
      if (n != 3)
        throw Error(ErrorCode::BoundNotApplicable, "triangle bound needs a 3-gon");
      break;
    case Bound::Kind::QuadrangleConjecture:
      if (n != 4)
        throw Error(ErrorCode::BoundNotApplicable, "quadrangle conjecture needs a 4-gon");
      break;
    case Bound::Kind::NgonUpper:
      if (bound.n() < 2 || n > bound.n())
        throw Error(ErrorCode::BoundNotApplicable,
                    "n-gon bound for n = " + std::to_string(bound.n()) +
                        " does not cover a polygon with " + std::to_string(n) + " vertices");
      break;
    case Bound::Kind::CurveUpper: break;
  }

  const double peri = perimeter(poly);
  const double radius = delta(poly).radius;
  const double ratio = peri / radius;
  const double bound_value = bound.value();
  const double slack = bound.is_lower() ? ratio - bound_value : bound_value - ratio;
  return {poly, peri, radius, ratio, bound, bound_value, slack >= 0.0, slack};
}

}  // namespace relcheb
