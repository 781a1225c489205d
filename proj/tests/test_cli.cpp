#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qrec/cli.hpp"
#include "qrec/io.hpp"

using namespace qrec;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qrec_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

const char* kQubit = R"({"energies": [0.0, 1.0], "hbar": 1.0,
  "state": {"pure": [[0.7071067811865476, 0.0], [0.7071067811865476, 0.0]]}})";

Json run_json(const cli::RunConfig& c, int& code) {
  std::ostringstream os;
  code = cli::run(c, os);
  return Json::parse(os.str());
}

}  // namespace

TEST_CASE("system parsing") {
  const auto spec = parse_system(Json::parse(kQubit));
  CHECK(spec.state_kind == "pure");
  CHECK(spec.rho0.population(0) == doctest::Approx(0.5));
  const auto diag = parse_system(Json::parse(R"({"energies": [0, 1, 2], "state": {"diagonal": [0.2, 0.3, 0.5]}})"));
  CHECK(diag.rho0.population(2) == doctest::Approx(0.5));
  const auto gibbs = parse_system(Json::parse(R"({"energies": [0, 1], "state": {"gibbs": {"beta": 1.0}}})"));
  CHECK(gibbs.rho0.population(0) > gibbs.rho0.population(1));
  const auto mat = parse_system(Json::parse(
      R"({"energies": [0, 1], "state": {"matrix": [[[0.5, 0], [0, 0.5]], [[0, -0.5], [0.5, 0]]]}})"));
  CHECK(mat.rho0(0, 1).imag() == doctest::Approx(0.5));
  CHECK_KIND(parse_system(Json::parse(R"({"state": {"diagonal": [1]}})")), ErrorKind::ParseError);
  CHECK_KIND(parse_system(Json::parse(R"({"energies": [0, 1], "state": {"diagonal": [1]}})")),
             ErrorKind::DimensionMismatch);
  CHECK_KIND(parse_system(Json::parse(R"({"energies": [0, 1], "state": {"foo": 1}})")), ErrorKind::ParseError);
}

TEST_CASE("number formatting") {
  CHECK(number(1.5) == Json(1.5));
  CHECK(number(std::numeric_limits<double>::infinity()) == Json("inf"));
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("bounds command") {
  cli::RunConfig c;
  c.command = cli::Command::Bounds;
  c.input = write_file("qubit.json", kQubit).string();
  c.threshold = 0.99;
  int code = -1;
  const auto j = run_json(c, code);
  CHECK(code == cli::kExitOk);
  CHECK(j["report"]["upper_thm2"].get<double>() > j["report"]["lower_mt"].get<double>());
  CHECK(j.contains("norm_labels"));
  CHECK(j["report"].contains("epsilon_convention"));
  CHECK(j["hbar"].get<double>() == 1.0);
}

TEST_CASE("exit codes") {
  cli::RunConfig c;
  c.command = cli::Command::Bounds;
  // populations 0.99 / 0.01: admissible epsilon below pi / 10
  c.input = write_file("skewed.json", R"({"energies": [0, 1],
    "state": {"pure": [[0.99498743710662, 0], [0.1, 0]]}})").string();
  c.threshold = 0.9;
  int code = -1;
  auto j = run_json(c, code);
  CHECK(code == cli::kExitPrecondition);
  CHECK(j["error"] == "PreconditionViolated");
  CHECK(j["details"].contains("max_admissible_epsilon"));

  c.input = scratch("missing.json").string();
  j = run_json(c, code);
  CHECK(code == cli::kExitIo);
  CHECK(j["error"] == "IoError");

  c.input = write_file("broken.json", "{ not json").string();
  j = run_json(c, code);
  CHECK(code == cli::kExitIo);
  CHECK(j["error"] == "ParseError");
}

TEST_CASE("search command writes json and csv") {
  cli::RunConfig c;
  c.command = cli::Command::Search;
  c.input = write_file("qubit.json", kQubit).string();
  c.threshold = 0.999;
  c.csv = scratch("qubit.csv").string();
  int code = -1;
  const auto j = run_json(c, code);
  CHECK(code == cli::kExitOk);
  CHECK(j["result"]["t_rec"].get<double>() == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(j["result"]["bracket"]["upper_ok"].get<bool>());
  std::ifstream csv(c.csv);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,fidelity,bures,trace_dist,hs_dist,torus_dist");
}

TEST_CASE("argument parsing") {
  int code = -1;
  const char* argv[] = {"qrec", "search", "--input", "CMakeLists.txt", "--dt", "0.1", "--horizon", "auto",
                        "--refine"};
  const auto c = cli::parse_args(9, argv, code);
  REQUIRE(c);
  CHECK(c->command == cli::Command::Search);
  REQUIRE(c->dt);
  CHECK(*c->dt == 0.1);
  CHECK_FALSE(c->horizon);
  CHECK(c->refine);
  const char* bad[] = {"qrec", "search", "--input", "CMakeLists.txt", "--dt", "fast"};
  CHECK_FALSE(cli::parse_args(6, bad, code));
  CHECK(code == cli::kExitIo);
}

TEST_CASE("geometry command") {
  cli::RunConfig c;
  c.command = cli::Command::Geometry;
  c.sphere_n = 2;
  c.radius = std::numbers::pi;
  c.tube_n = 3;
  c.theta = 0.5;
  c.length = 2.0;
  c.metric_space = write_file("cycle.json", R"({"dist": [[0,1,1],[1,0,1],[1,1,0]], "measure": [1,1,1],
    "permutation": [1,2,0]})").string();
  c.r = 1.0;
  int code = -1;
  const auto j = run_json(c, code);
  CHECK(code == cli::kExitOk);
  CHECK(j["sphere_ball"]["volume"].get<double>() == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(j["tube"]["volume"].get<double>() == doctest::Approx(std::numbers::pi * 0.5));
  CHECK(j["metric_recurrence"]["ok"].get<bool>());
}
