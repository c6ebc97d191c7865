#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "relcheb/chebyshev.hpp"
#include "relcheb/geometry.hpp"
#include "relcheb/search.hpp"

namespace relcheb {

// Wire format: {"vertices": [[x,y], ...]}. The reader validates through
// validate_convex_polygon; malformed documents raise BadInput.
nlohmann::json polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const nlohmann::json& j);
ConvexPolygon read_polygon(std::istream& in);

nlohmann::json delta_to_json(const ConvexPolygon& poly, const ChebyshevResult& result);
nlohmann::json search_to_json(const SearchResult& result, std::uint64_t seed, int restarts);

}  // namespace relcheb
