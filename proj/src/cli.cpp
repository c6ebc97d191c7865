#include "relcheb/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relcheb/chebyshev.hpp"
#include "relcheb/extremal.hpp"
#include "relcheb/json_io.hpp"
#include "relcheb/random_polygon.hpp"
#include "relcheb/search.hpp"
#include "relcheb/svg.hpp"

namespace relcheb {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

// 9 significant digits for human-readable reports.
std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

ConvexPolygon load_polygon(const std::string& path) {
  if (path == "-") return read_polygon(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  return read_polygon(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot open " + path + " for writing");
  out << text;
}

const char* triangle_case_label(TriangleCase c) {
  switch (c) {
    case TriangleCase::HalfDiameter: return "alpha ≥ π/2 (half-diameter)";
    case TriangleCase::Altitude: return "γ ≥ π/4 (altitude)";
    case TriangleCase::IsoscelesChord: return "γ ≤ π/4, α ≤ π/2 (isoceles chord)";
  }
  return "?";
}

int cmd_delta(const std::string& in_path, const std::string& json_path,
              const std::string& svg_path) {
  ConvexPolygon poly = load_polygon(in_path);
  ChebyshevResult result = delta(poly);
  const double peri = perimeter(poly);

  std::cout << "radius (delta) = " << fmt9(result.radius) << "\n";
  std::cout << "perimeter      = " << fmt9(peri) << "\n";
  std::cout << "ratio L/delta  = " << fmt9(peri / result.radius) << "\n";
  std::cout << "extremal points (" << result.extremal_points.size() << "):\n";
  for (const ExtremalPoint& ep : result.extremal_points) {
    std::cout << "  edge " << ep.edge << "  t = " << fmt9(ep.t) << "  point = ("
              << fmt9(ep.point.x) << ", " << fmt9(ep.point.y) << ")  footpoints = [";
    for (std::size_t i = 0; i < ep.footpoints.size(); ++i)
      std::cout << (i ? " " : "") << ep.footpoints[i];
    std::cout << "]\n";
  }

  if (!json_path.empty()) write_text(json_path, delta_to_json(poly, result).dump() + "\n");
  if (!svg_path.empty()) {
    const std::string ann =
        "delta = " + fmt9(result.radius) + ", L/delta = " + fmt9(peri / result.radius);
    write_text(svg_path, render_delta_svg(poly, result, ann));
  }
  return kExitOk;
}

int cmd_triangle(double a, double b, double c) {
  TriangleDelta td = delta_triangle_case(a, b, c);
  std::cout << "delta = " << fmt9(td.value) << "\n";
  std::cout << "case: " << triangle_case_label(td.which) << "\n";
  return kExitOk;
}

int cmd_ratio(const std::string& in_path, const std::string& bound_name) {
  ConvexPolygon poly = load_polygon(in_path);
  std::optional<Bound> bound;
  if (bound_name == "triangle") bound = Bound::triangle_lower();
  else if (bound_name == "ngon") bound = Bound::ngon_upper(static_cast<long long>(poly.size()));
  else if (bound_name == "curve") bound = Bound::curve_upper();
  else if (bound_name == "quad-conjecture") bound = Bound::quadrangle_conjecture();
  else throw Error(ErrorCode::BadInput, "unknown bound " + bound_name);

  RatioReport report = ratio_report(poly, *bound);
  std::cout << "perimeter = " << fmt9(report.perimeter) << "\n";
  std::cout << "delta     = " << fmt9(report.radius) << "\n";
  std::cout << "ratio     = " << fmt9(report.ratio) << "\n";
  std::cout << "bound     = " << report.bound.name() << " (" << fmt9(report.bound_value)
            << ", " << (report.bound.is_lower() ? "lower" : "upper") << ")\n";
  std::cout << "slack     = " << fmt9(report.slack) << "\n";
  const bool equality = std::abs(report.slack) <= 1e-9;
  if (equality) {
    std::cout << (report.bound.is_conjectural() ? "status    : conjectural equality\n"
                                                : "status    : equality (extremal figure)\n");
  }
  if (report.satisfied || equality) {
    std::cout << "satisfied = " << (report.satisfied ? "yes" : "no (within tolerance)") << "\n";
    return kExitOk;
  }
  if (report.bound.is_conjectural()) {
    std::cout << "satisfied = no (conjectural bound, not a violation)\n";
    return kExitOk;
  }
  std::cout << "satisfied = no (bound violated)\n";
  return kExitViolated;
}

int cmd_verify(const std::string& kind, long long n, long long samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::ParameterOutOfRange, "--samples must be >= 1");
  Rng rng(seed);
  double worst_slack = std::numeric_limits<double>::infinity();
  double worst_ratio = 0.0;
  long long violations = 0;
  std::optional<Bound> bound;

  for (long long k = 0; k < samples; ++k) {
    ConvexPolygon poly = [&] {
      if (kind == "triangle-bound") return random_triangle(rng);
      if (kind == "ngon-bound") return random_convex_polygon(rng, static_cast<std::size_t>(n));
      return random_convex_polygon_up_to(rng, 64);
    }();
    Bound b = kind == "triangle-bound" ? Bound::triangle_lower()
              : kind == "ngon-bound"   ? Bound::ngon_upper(n)
                                       : Bound::curve_upper();
    bound = b;
    RatioReport report = ratio_report(poly, b);
    if (report.slack < worst_slack) {
      worst_slack = report.slack;
      worst_ratio = report.ratio;
    }
    if (report.slack < -1e-9) ++violations;
  }

  std::cout << "checked " << samples << " random polygons against " << bound->name() << " = "
            << fmt9(bound->value()) << "\n";
  std::cout << "tightest ratio = " << fmt9(worst_ratio) << " (slack " << fmt9(worst_slack)
            << ")\n";
  std::cout << "violations beyond 1e-9: " << violations << "\n";
  return violations == 0 ? kExitOk : kExitViolated;
}

void print_search(const SearchResult& result, std::uint64_t seed, int restarts,
                  const std::string& json_path) {
  std::cout << "objective   = " << fmt9(result.objective) << "\n";
  std::cout << "evaluations = " << result.evaluations << " across " << restarts
            << " restarts (" << result.converged_restarts << " converged)\n";
  std::cout << "best polygon vertices:\n";
  for (const Point& p : result.best_polygon.vertices())
    std::cout << "  (" << fmt9(p.x) << ", " << fmt9(p.y) << ")\n";
  if (!json_path.empty())
    write_text(json_path, search_to_json(result, seed, restarts).dump() + "\n");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"relative Chebyshev radius toolkit for convex polygons"};
  app.require_subcommand(1);

  // delta
  std::string delta_in, delta_json, delta_svg;
  CLI::App* sc_delta = app.add_subcommand("delta", "radius, extremal points, footpoints");
  sc_delta->add_option("input", delta_in, "polygon JSON file ('-' for stdin)")->required();
  sc_delta->add_option("--json", delta_json, "write result JSON here ('-' for stdout)");
  sc_delta->add_option("--svg", delta_svg, "write an SVG figure here");

  // triangle
  std::vector<double> sides;
  CLI::App* sc_triangle = app.add_subcommand("triangle", "closed-form radius of a triangle");
  sc_triangle->add_option("--sides", sides, "side lengths a b c")->expected(3)->required();

  // ratio
  std::string ratio_in, ratio_bound;
  CLI::App* sc_ratio = app.add_subcommand("ratio", "compare L/delta against a sharp bound");
  sc_ratio->add_option("input", ratio_in, "polygon JSON file ('-' for stdin)")->required();
  sc_ratio->add_option("--bound", ratio_bound, "triangle|ngon|curve|quad-conjecture")
      ->required();

  // construct
  CLI::App* sc_construct = app.add_subcommand("construct", "build a named extremal polygon");
  sc_construct->require_subcommand(1);
  long long un_n = 0;
  double un_r = 1.0;
  std::string construct_out = "-";
  CLI::App* sc_un = sc_construct->add_subcommand("un", "the maximal-perimeter n-gon U_n");
  sc_un->add_option("--n", un_n, "vertex count")->required();
  sc_un->add_option("--r", un_r, "radius (default 1)");
  sc_un->add_option("--out", construct_out, "output path (default stdout)");
  double hd_r = 1.0;
  long long hd_m = 0;
  CLI::App* sc_hd = sc_construct->add_subcommand("half-disk", "half-disk boundary polyline");
  sc_hd->add_option("--r", hd_r, "radius (default 1)");
  sc_hd->add_option("--m", hd_m, "arc segment count")->required();
  sc_hd->add_option("--out", construct_out, "output path (default stdout)");
  CLI::App* sc_kite = sc_construct->add_subcommand("magic-kite", "conjectured minimal quadrangle");
  sc_kite->add_option("--out", construct_out, "output path (default stdout)");

  // verify
  CLI::App* sc_verify = app.add_subcommand("verify", "randomized bound checks");
  sc_verify->require_subcommand(1);
  long long verify_samples = 1000;
  std::uint64_t verify_seed = 1;
  long long verify_n = 4;
  CLI::App* sc_vt = sc_verify->add_subcommand("triangle-bound", "L >= 2*sqrt(3)*delta");
  CLI::App* sc_vn = sc_verify->add_subcommand("ngon-bound", "L <= lambda_n*delta");
  sc_vn->add_option("--n", verify_n, "vertex count (2..12)")->required();
  CLI::App* sc_vc = sc_verify->add_subcommand("curve-bound", "L <= (2+pi)*delta");
  for (CLI::App* sc : {sc_vt, sc_vn, sc_vc}) {
    sc->add_option("--samples", verify_samples, "sample count (default 1000)");
    sc->add_option("--seed", verify_seed, "RNG seed (default 1)");
  }

  // search
  CLI::App* sc_search = app.add_subcommand("search", "derivative-free shape searches");
  sc_search->require_subcommand(1);
  SearchConfig config;
  std::string search_json;
  long long search_n = 4;
  double search_l = 1.0;
  CLI::App* sc_quad =
      sc_search->add_subcommand("quad-min-ratio", "minimize L/delta over quadrangles");
  CLI::App* sc_ngon = sc_search->add_subcommand("ngon-max-ratio", "maximize L/delta over n-gons");
  sc_ngon->add_option("--n", search_n, "vertex count")->required();
  CLI::App* sc_cnl =
      sc_search->add_subcommand("cnl", "minimize perimeter under the equidistant-point property");
  sc_cnl->add_option("--n", search_n, "vertex count")->required();
  sc_cnl->add_option("--l", search_l, "distance threshold")->required();
  for (CLI::App* sc : {sc_quad, sc_ngon, sc_cnl}) {
    sc->add_option("--seed", config.seed, "RNG seed (default 1)");
    sc->add_option("--restarts", config.restarts, "restart count (default 16)");
    sc->add_option("--iters", config.max_iterations_per_restart,
                   "iteration budget per restart (default 4800)");
    sc->add_option("--json", search_json, "write result JSON here ('-' for stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc_delta->parsed()) return cmd_delta(delta_in, delta_json, delta_svg);
    if (sc_triangle->parsed()) return cmd_triangle(sides[0], sides[1], sides[2]);
    if (sc_ratio->parsed()) return cmd_ratio(ratio_in, ratio_bound);
    if (sc_construct->parsed()) {
      ConvexPolygon poly = sc_un->parsed()   ? build_U_n(un_n, un_r)
                           : sc_hd->parsed() ? half_disk_polyline(hd_r, hd_m)
                                             : magic_kite();
      write_text(construct_out, polygon_to_json(poly).dump() + "\n");
      return kExitOk;
    }
    if (sc_verify->parsed()) {
      const std::string kind = sc_vt->parsed()   ? "triangle-bound"
                               : sc_vn->parsed() ? "ngon-bound"
                                                 : "curve-bound";
      if (kind == "ngon-bound" && (verify_n < 2 || verify_n > 12))
        throw Error(ErrorCode::NOutOfRange, "--n must lie in [2, 12]");
      return cmd_verify(kind, verify_n, verify_samples, verify_seed);
    }
    if (sc_search->parsed()) {
      SearchResult result = sc_quad->parsed()   ? minimize_quadrangle_ratio(config)
                            : sc_ngon->parsed() ? maximize_ngon_ratio(search_n, config)
                                                : min_perimeter_cnl(search_n, search_l, config);
      print_search(result, config.seed, config.restarts, search_json);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace relcheb
