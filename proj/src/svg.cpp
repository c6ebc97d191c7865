#include "relcheb/svg.hpp"

#include <algorithm>
#include <sstream>

namespace relcheb {

std::string render_delta_svg(const ConvexPolygon& poly, const ChebyshevResult& result,
                             const std::string& annotation) {
  double min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
  auto grow = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const Point& p : poly.vertices()) grow(p.x, p.y);
  for (const ExtremalPoint& ep : result.extremal_points) {
    grow(ep.point.x - result.radius, ep.point.y - result.radius);
    grow(ep.point.x + result.radius, ep.point.y + result.radius);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * span;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;

  const double sw = 0.004 * span;  // stroke width
  std::ostringstream svg;
  svg.precision(10);
  // y axis flipped so the figure reads with y up
  auto Y = [&](double y) { return (max_y + min_y) - y; };

  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << min_x << " "
      << min_y << " " << (max_x - min_x) << " " << (max_y - min_y) << "\">\n";

  svg << "  <polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) svg << " ";
    svg << poly[i].x << "," << Y(poly[i].y);
  }
  svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << sw << "\"/>\n";

  for (const ExtremalPoint& ep : result.extremal_points) {
    svg << "  <circle cx=\"" << ep.point.x << "\" cy=\"" << Y(ep.point.y) << "\" r=\""
        << result.radius << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << sw
        << "\"/>\n";
    for (std::size_t v : ep.footpoints) {
      svg << "  <line x1=\"" << ep.point.x << "\" y1=\"" << Y(ep.point.y) << "\" x2=\""
          << poly[v].x << "\" y2=\"" << Y(poly[v].y)
          << "\" stroke=\"#d62728\" stroke-width=\"" << sw << "\" stroke-dasharray=\""
          << 4 * sw << " " << 3 * sw << "\"/>\n";
    }
    svg << "  <circle cx=\"" << ep.point.x << "\" cy=\"" << Y(ep.point.y) << "\" r=\"" << 2 * sw
        << "\" fill=\"#1f77b4\"/>\n";
  }

  svg << "  <text x=\"" << min_x + margin << "\" y=\"" << min_y + 2 * margin
      << "\" font-size=\"" << 8 * sw << "\">" << annotation << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace relcheb
