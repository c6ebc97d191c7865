#pragma once

#include "relcheb/geometry.hpp"
#include "relcheb/rng.hpp"

namespace relcheb {

// Random convex polygon with exactly n vertices: n angles sampled uniformly
// on the circle, radii on a random star, resampled until the points are in
// strictly convex position. Practical for n up to ~12; larger n rejects too
// often, use random_convex_polygon_up_to instead.
ConvexPolygon random_convex_polygon(Rng& rng, std::size_t n);

// Random convex polygon with at most max_n vertices: convex hull of a
// max_n-point star.
ConvexPolygon random_convex_polygon_up_to(Rng& rng, std::size_t max_n);

struct TriangleSides {
  double a, b, c;  // a >= b >= c
};

// Random triangle with unit longest side, built from sampled angles. The
// largest angle is placed uniformly over all three regions of the
// closed-form radius (obtuse, mid, acute/slim), so samples span every case.
// Vertices: B=(0,0), C=(1,0), A above the x-axis.
ConvexPolygon random_triangle(Rng& rng, TriangleSides* sides = nullptr);

// As above but pinned near a case boundary of the closed form:
// which = 0 gives |alpha - pi/2| < 1e-6, which = 1 gives |gamma - pi/4| < 1e-6.
ConvexPolygon boundary_case_triangle(Rng& rng, int which, TriangleSides* sides = nullptr);

// Triangle from explicit angles (alpha >= beta >= gamma, summing to pi),
// longest side BC pinned to unit length.
ConvexPolygon triangle_from_angles(double alpha, double beta, double gamma,
                                   TriangleSides* sides = nullptr);

}  // namespace relcheb
