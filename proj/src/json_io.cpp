#include "relcheb/json_io.hpp"

#include <istream>

namespace relcheb {

using nlohmann::json;

json polygon_to_json(const ConvexPolygon& poly) {
  json verts = json::array();
  for (const Point& p : poly.vertices()) verts.push_back({p.x, p.y});
  return json{{"vertices", std::move(verts)}};
}

ConvexPolygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorCode::BadInput, "expected an object with a \"vertices\" array");
  std::vector<Point> pts;
  pts.reserve(j["vertices"].size());
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw Error(ErrorCode::BadInput, "each vertex must be a [x, y] number pair");
    pts.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  return validate_convex_polygon(std::move(pts));
}

ConvexPolygon read_polygon(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
  }
  return polygon_from_json(j);
}

json delta_to_json(const ConvexPolygon& poly, const ChebyshevResult& result) {
  json extremals = json::array();
  for (const ExtremalPoint& ep : result.extremal_points) {
    extremals.push_back({{"edge", ep.edge},
                         {"t", ep.t},
                         {"point", {ep.point.x, ep.point.y}},
                         {"footpoints", ep.footpoints}});
  }
  const double peri = perimeter(poly);
  return json{{"radius", result.radius},
              {"extremal_points", std::move(extremals)},
              {"perimeter", peri},
              {"ratio", peri / result.radius}};
}

json search_to_json(const SearchResult& result, std::uint64_t seed, int restarts) {
  return json{{"objective", result.objective},
              {"polygon", polygon_to_json(result.best_polygon)},
              {"seed", seed},
              {"restarts", restarts},
              {"per_restart", result.per_restart_bests},
              {"evaluations", result.evaluations},
              {"converged_restarts", result.converged_restarts}};
}

}  // namespace relcheb
