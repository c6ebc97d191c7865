#pragma once

#include <string>

#include "relcheb/chebyshev.hpp"
#include "relcheb/geometry.hpp"

namespace relcheb {

// Static SVG figure: polygon outline, extremal points, dashed distinguished
// chords, and the covering circle of radius delta around each extremal
// point. The viewport fits everything with a 5% margin.
std::string render_delta_svg(const ConvexPolygon& poly, const ChebyshevResult& result,
                             const std::string& annotation);

}  // namespace relcheb
