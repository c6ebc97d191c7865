#include <cmath>
#include <limits>

#include "doctest.h"
#include "relcheb/geometry.hpp"
#include "relcheb/random_polygon.hpp"
#include "test_util.hpp"

using namespace relcheb;
using testutil::make_poly;
using testutil::unit_square;

TEST_CASE("validate accepts the unit square and keeps CCW order") {
  ConvexPolygon p = unit_square();
  REQUIRE(p.size() == 4);
  CHECK(p[0].x == 0.0);
  CHECK(p[2].x == 1.0);
  CHECK(p[2].y == 1.0);
}

TEST_CASE("validate accepts a 2-gon") {
  ConvexPolygon p = make_poly({{0, 0}, {2, 0}});
  CHECK(p.size() == 2);
  CHECK(p.edge_count() == 2);
}

namespace {
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadInput;
}
}  // namespace

TEST_CASE("validate rejects a collinear triple") {
  CHECK(code_of([] { make_poly({{0, 0}, {1, 0}, {2, 0}, {1, 1}}); }) == ErrorCode::NotConvex);
}

TEST_CASE("validate rejects reflex vertices") {
  CHECK(code_of([] { make_poly({{0, 0}, {2, 0}, {2, 2}, {1, 0.5}, {0, 2}}); }) ==
        ErrorCode::NotConvex);
}

TEST_CASE("validate error codes") {
  CHECK(code_of([] { make_poly({{1, 2}}); }) == ErrorCode::TooFewVertices);
  CHECK(code_of([] { make_poly({{0, 0}, {0, 0}}); }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([] { make_poly({{0, 0}, {1, 0}, {1, 1e-15}, {0, 1}}); }) ==
        ErrorCode::DuplicateVertex);
  Point bad;
  bad.x = std::nan("");
  CHECK(code_of([&] { validate_convex_polygon({Point(0, 0), Point(1, 0), bad}); }) ==
        ErrorCode::NonFinite);
  CHECK_THROWS_AS(Point(std::numeric_limits<double>::infinity(), 0.0), Error);
}

TEST_CASE("clockwise input is reversed to CCW with vertex 0 fixed") {
  ConvexPolygon p = make_poly({{0, 0}, {0, 1}, {1, 1}, {1, 0}});  // CW square
  CHECK(p[0].x == 0.0);
  CHECK(p[0].y == 0.0);
  CHECK(p[1].x == 1.0);  // reversed tail
  CHECK(p[1].y == 0.0);
  CHECK(cross(p[0], p[1], p[2]) > 0.0);
}

TEST_CASE("perimeter of basic shapes") {
  CHECK(perimeter(unit_square()) == doctest::Approx(4.0).epsilon(1e-15));
  // a 2-gon counts the segment twice
  CHECK(perimeter(make_poly({{0, 0}, {2, 0}})) == doctest::Approx(4.0).epsilon(1e-15));
  ConvexPolygon eq = make_poly({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  CHECK(perimeter(eq) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("diameter of basic shapes") {
  Diameter d = diameter(unit_square());
  CHECK(d.length == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d.i == 0);
  CHECK(d.j == 2);
  Diameter s = diameter(make_poly({{0, 0}, {2, 0}}));
  CHECK(s.length == doctest::Approx(2.0));
  CHECK(s.i == 0);
  CHECK(s.j == 1);
}

TEST_CASE("diameter matches the brute-force pair scan") {
  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    ConvexPolygon p = random_convex_polygon(rng, 3 + rng.uniform_index(6));
    auto expect = testutil::brute_diameter(p);
    Diameter got = diameter(p);
    CHECK(got.length == doctest::Approx(expect.length).epsilon(1e-15));
    CHECK(got.i == expect.i);
    CHECK(got.j == expect.j);
  }
}

TEST_CASE("edge_point interpolates and hits endpoints exactly") {
  ConvexPolygon sq = unit_square();
  Point m = edge_point(sq, 0, 0.5);
  CHECK(m.x == doctest::Approx(0.5));
  CHECK(m.y == 0.0);
  Point a = edge_point(sq, 3, 0.0);
  CHECK(a.x == sq[3].x);
  CHECK(a.y == sq[3].y);
  Point b = edge_point(sq, 3, 1.0);
  CHECK(b.x == sq[0].x);
  CHECK(b.y == sq[0].y);

  ConvexPolygon seg = make_poly({{0, 0}, {2, 0}});
  Point back = edge_point(seg, 1, 0.25);  // second edge runs q -> p
  CHECK(back.x == doctest::Approx(1.5));

  CHECK_THROWS_AS(edge_point(sq, 4, 0.5), Error);
  CHECK_THROWS_AS(edge_point(sq, 0, -0.1), Error);
  CHECK_THROWS_AS(edge_point(sq, 0, 1.1), Error);
}

TEST_CASE("perimeter is isometry invariant and scales linearly") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    ConvexPolygon p = random_convex_polygon(rng, 2 + rng.uniform_index(8));
    const double base = perimeter(p);
    ConvexPolygon moved = testutil::transformed(p, rng.uniform(0, 6.28), rng.uniform(-5, 5),
                                                rng.uniform(-5, 5), k % 2 == 0);
    CHECK(perimeter(moved) == doctest::Approx(base).epsilon(1e-12));
    const double s = rng.uniform(0.1, 10.0);
    ConvexPolygon scaled = testutil::transformed(p, 0.0, 0.0, 0.0, false, s);
    CHECK(perimeter(scaled) == doctest::Approx(s * base).epsilon(1e-12));
  }
}

TEST_CASE("perimeter is monotone under inclusion") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    ConvexPolygon p = random_convex_polygon(rng, 5 + rng.uniform_index(5));
    const double outer = perimeter(p);

    // drop vertices: the remaining cycle stays convex and inside p
    std::vector<Point> sub;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i < 3 || rng.uniform() < 0.6) sub.push_back(p[i]);
    CHECK(perimeter(validate_convex_polygon(sub)) <= outer + 1e-9);

    // shrink towards the centroid
    double cx = 0, cy = 0;
    for (const Point& v : p.vertices()) {
      cx += v.x;
      cy += v.y;
    }
    cx /= static_cast<double>(p.size());
    cy /= static_cast<double>(p.size());
    std::vector<Point> shrunk;
    const double f = rng.uniform(0.2, 0.95);
    for (const Point& v : p.vertices())
      shrunk.emplace_back(cx + f * (v.x - cx), cy + f * (v.y - cy));
    CHECK(perimeter(validate_convex_polygon(shrunk)) <= outer + 1e-9);
  }
}

TEST_CASE("diameter is at most half the perimeter") {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    ConvexPolygon p = random_convex_polygon(rng, 3 + rng.uniform_index(8));
    CHECK(diameter(p).length <= perimeter(p) / 2 + 1e-12);
  }
}
