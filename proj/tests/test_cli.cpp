#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "spawn.hpp"

using nlohmann::json;
using testutil::run_cmd;

namespace {

const std::string kCli = RELCHEB_CLI_PATH;

std::string write_file(const std::string& dir, const std::string& name,
                       const std::string& content) {
  const std::string path = dir + "/" + name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// minimal XML well-formedness check: tags must nest properly
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = text.find('<', i)) != std::string::npos) {
    const std::size_t end = text.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?') continue;                       // declaration
    if (tag[0] == '/') {                               // closing
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;                   // self-closing
    stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("triangle subcommand prints the closed form with its case label") {
  auto r = run_cmd(kCli + " triangle --sides 1 1 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.866025404") != std::string::npos);
  CHECK(r.out.find("γ ≥ π/4 (altitude)") != std::string::npos);

  auto obtuse = run_cmd(kCli + " triangle --sides 1.4142135623730951 1 1");
  CHECK(obtuse.out.find("alpha ≥ π/2 (half-diameter)") != std::string::npos);
  CHECK(obtuse.out.find("0.707106781") != std::string::npos);

  // angles (80, 60, 40) degrees: acute with gamma < pi/4
  auto chord = run_cmd(kCli +
                       " triangle --sides 0.984807753012208 0.8660254037844386 "
                       "0.6427876096865393");
  CHECK(chord.exit_code == 0);
  CHECK(chord.out.find("γ ≤ π/4, α ≤ π/2 (isoceles chord)") != std::string::npos);
}

TEST_CASE("exit codes: usage 2, input 3, success 0") {
  CHECK(run_cmd(kCli).exit_code == 2);
  CHECK(run_cmd(kCli + " bogus-subcommand").exit_code == 2);
  CHECK(run_cmd(kCli + " triangle").exit_code == 2);
  CHECK(run_cmd(kCli + " verify bogus").exit_code == 2);
  CHECK(run_cmd(kCli + " triangle --sides 1 1 3").exit_code == 3);
  CHECK(run_cmd(kCli + " delta /nonexistent/path.json").exit_code == 3);
  CHECK(run_cmd(kCli + " --help").exit_code == 0);

  const std::string dir = testutil::make_temp_dir();
  const std::string bad = write_file(dir, "bad.json", "{not json");
  CHECK(run_cmd(kCli + " delta " + bad).exit_code == 3);
  const std::string nonconvex =
      write_file(dir, "nc.json", R"({"vertices": [[0,0],[1,0],[2,0],[1,1]]})");
  CHECK(run_cmd(kCli + " delta " + nonconvex).exit_code == 3);
}

TEST_CASE("construct | delta pipe reproduces the U_n radius") {
  auto r = run_cmd(kCli + " construct un --n 5 --r 1 | " + kCli + " delta -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("radius (delta) = 1\n") != std::string::npos);

  const std::string dir = testutil::make_temp_dir();
  const std::string out = dir + "/u5.json";
  run_cmd(kCli + " construct un --n 5 --r 1 | " + kCli + " delta - --json " + out);
  const json j = json::parse(slurp(out));
  CHECK(std::abs(j["radius"].get<double>() - 1.0) <= 1e-9);
  CHECK(j["extremal_points"].size() == 1);
}

TEST_CASE("magic kite through the pipe hits the conjectured ratio") {
  auto r = run_cmd(kCli + " construct magic-kite | " + kCli + " ratio - --bound quad-conjecture");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ratio     = 3.38994634") != std::string::npos);
  CHECK(r.out.find("conjectural equality") != std::string::npos);
}

TEST_CASE("equality cases are labeled") {
  auto un = run_cmd(kCli + " construct un --n 6 --r 1 | " + kCli + " ratio - --bound ngon");
  CHECK(un.out.find("equality (extremal figure)") != std::string::npos);

  std::ostringstream eq;
  eq << kCli << " ratio - --bound triangle";
  const std::string dir = testutil::make_temp_dir();
  std::ofstream(dir + "/eq.json")
      << R"({"vertices": [[0,0],[1,0],[0.5,0.8660254037844386]]})";
  auto tri = run_cmd(kCli + " ratio " + dir + "/eq.json --bound triangle");
  CHECK(tri.exit_code == 0);
  CHECK(tri.out.find("equality (extremal figure)") != std::string::npos);
}

TEST_CASE("ratio with the ngon bound uses the polygon's own vertex count") {
  auto r = run_cmd(kCli + " construct un --n 6 --r 1 | " + kCli + " ratio - --bound ngon");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("NgonUpper(6)") != std::string::npos);
}

TEST_CASE("half-disk construct matches un") {
  auto a = run_cmd(kCli + " construct half-disk --r 2 --m 6");
  auto b = run_cmd(kCli + " construct un --n 7 --r 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("delta on the square: json and svg outputs") {
  const std::string dir = testutil::make_temp_dir();
  const std::string sq =
      write_file(dir, "square.json", R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})");

  auto r1 = run_cmd(kCli + " delta " + sq + " --json " + dir + "/out1.json --svg " + dir +
                    "/fig1.svg");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("radius (delta) = 1.11803399") != std::string::npos);
  CHECK(r1.out.find("extremal points (4)") != std::string::npos);

  const json j = json::parse(slurp(dir + "/out1.json"));
  CHECK(std::abs(j["radius"].get<double>() - std::sqrt(5.0) / 2) <= 1e-9);
  CHECK(std::abs(j["ratio"].get<double>() - 8.0 / std::sqrt(5.0)) <= 1e-9);
  CHECK(std::abs(j["perimeter"].get<double>() - 4.0) <= 1e-12);
  REQUIRE(j["extremal_points"].size() == 4);
  CHECK(j["extremal_points"][0]["footpoints"].size() == 2);

  // byte-stable across runs
  auto r2 = run_cmd(kCli + " delta " + sq + " --json " + dir + "/out2.json --svg " + dir +
                    "/fig2.svg");
  CHECK(r1.out == r2.out);
  CHECK(slurp(dir + "/out1.json") == slurp(dir + "/out2.json"));
  CHECK(slurp(dir + "/fig1.svg") == slurp(dir + "/fig2.svg"));

  const std::string svg = slurp(dir + "/fig1.svg");
  CHECK(xml_well_formed(svg));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("<text") != std::string::npos);
}

TEST_CASE("verify subcommands are deterministic and pass") {
  auto a = run_cmd(kCli + " verify triangle-bound --samples 150 --seed 5");
  auto b = run_cmd(kCli + " verify triangle-bound --samples 150 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto n = run_cmd(kCli + " verify ngon-bound --n 5 --samples 80 --seed 3");
  CHECK(n.exit_code == 0);
  auto c = run_cmd(kCli + " verify curve-bound --samples 40 --seed 3");
  CHECK(c.exit_code == 0);
}

TEST_CASE("search subcommand emits reproducible json") {
  const std::string dir = testutil::make_temp_dir();
  const std::string cmd = kCli + " search ngon-max-ratio --n 3 --seed 2 --restarts 3 --iters 1600";
  auto a = run_cmd(cmd + " --json " + dir + "/a.json");
  auto b = run_cmd(cmd + " --json " + dir + "/b.json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(dir + "/a.json") == slurp(dir + "/b.json"));
  const json j = json::parse(slurp(dir + "/a.json"));
  CHECK(j["objective"].get<double>() <= 2.0 * (1.0 + std::sqrt(2.0)) + 1e-9);
  CHECK(j["polygon"]["vertices"].size() == 3);
  CHECK(j["per_restart"].size() == 3);
}
