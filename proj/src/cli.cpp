#include "qrec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrec/io.hpp"
#include "qrec/verify.hpp"

namespace qrec::cli {

namespace {

constexpr const char* kNormLabels =
    "fidelity: Uhlmann root form; bures: sqrt(2 - 2F); trace_dist: full trace norm; hs_dist: Frobenius";

Json error_json(const RunConfig& c, const std::string& kind, const std::string& message,
                const std::map<std::string, double>& details = {}) {
  Json d = Json::object();
  for (const auto& [k, v] : details) d[k] = number(v);
  return Json{{"command", to_string(c.command)}, {"error", kind}, {"message", message}, {"details", d}};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::IoError, "cannot write " + path);
}

int exit_code_for(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::IoError ? kExitIo : kExitPrecondition;
}

void require_threshold(double th) {
  if (!(th > 0.0 && th < 1.0)) {
    throw Error(ErrorKind::BadParameter, "threshold must lie in (0, 1)", {{"threshold", th}});
  }
}

SystemSpec need_system(const RunConfig& c) {
  if (c.input.empty()) throw Error(ErrorKind::BadParameter, "--input is required");
  return load_system(c.input);
}

Json header(const RunConfig& c, const SystemSpec& sys) {
  return Json{{"command", to_string(c.command)},
              {"dimension", sys.h.dim()},
              {"hbar", number(sys.h.hbar())},
              {"state_kind", sys.state_kind},
              {"threshold", number(c.threshold)},
              {"norm_labels", kNormLabels}};
}

Json estimates(const SystemSpec& sys, double threshold) {
  EstimatorInputs in;
  in.n = sys.h.dim();
  for (double e : sys.h.energies()) in.nu.push_back(e / (2.0 * std::numbers::pi * sys.h.hbar()));
  in.epsilon = 2.0 - 2.0 * threshold;
  Json j{{"label", kEstimateLabel}, {"epsilon", number(in.epsilon)}, {"epsilon_convention", "2 - 2 * threshold"}};
  auto attempt = [&](const char* name, double (*f)(const EstimatorInputs&)) {
    try {
      j[name] = number(f(in));
    } catch (const Error& e) {
      j[name] = Json{{"error", qrec::to_string(e.kind())}, {"message", e.what()}};
    }
  };
  attempt("peres", peres_estimate);
  attempt("bhattacharyya", bhattacharyya_estimate);
  return j;
}

std::optional<TruncationResult> maybe_truncate(const RunConfig& c, const DensityMatrix& rho) {
  if (c.n_relevant) return truncate(rho, *c.n_relevant, c.order);
  if (c.delta_target) return truncate(rho, choose_n(rho, *c.delta_target), c.order);
  return std::nullopt;
}

Json corollaries(const RunConfig& c, const SystemSpec& sys, const TruncationResult& tr) {
  Json j = Json::object();
  try {
    j["energy"] = to_json(corollary_bounds(sys.h, tr, thm2_epsilon_from_threshold(c.threshold),
                                           CorollaryMode::Energy));
  } catch (const Error& e) {
    j["energy"] = error_json(c, qrec::to_string(e.kind()), e.what(), e.details());
  }
  j["dimension"] = to_json(corollary_bounds(sys.h, tr, c.threshold, CorollaryMode::Dimension, c.step));
  return j;
}

Json cmd_bounds(const RunConfig& c) {
  require_threshold(c.threshold);
  const auto sys = need_system(c);
  const auto rep = thm2_bounds(sys.h, sys.rho0, thm2_epsilon_from_threshold(c.threshold), c.reduce_support);
  Json j = header(c, sys);
  j["report"] = to_json(rep);
  j["estimates"] = estimates(sys, c.threshold);
  if (auto tr = maybe_truncate(c, sys.rho0)) {
    j["truncation"] = to_json(*tr);
    j["corollary"] = corollaries(c, sys, *tr);
  }
  return j;
}

Json cmd_search(const RunConfig& c) {
  require_threshold(c.threshold);
  const auto sys = need_system(c);
  Json j = header(c, sys);
  std::optional<BoundReport> rep;
  try {
    rep = thm2_bounds(sys.h, sys.rho0, thm2_epsilon_from_threshold(c.threshold), c.reduce_support);
    j["bounds"] = to_json(*rep);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated && e.kind() != ErrorKind::StationaryState) throw;
    j["bounds"] = error_json(c, qrec::to_string(e.kind()), e.what(), e.details());
  }
  const double dt = c.dt.value_or(default_dt(sys.h));
  Grid grid;
  if (c.horizon) {
    grid = grid_for_horizon(c.t0, dt, *c.horizon, kDefaultMaxSamples);
  } else {
    grid = auto_grid(sys.h, rep, dt);
    grid.t0 = c.t0;
  }
  j["grid_mode"] = {{"dt", c.dt ? "explicit" : "auto"}, {"horizon", c.horizon ? "explicit" : "auto"}};
  SearchOptions so;
  so.allow_coarse = c.allow_coarse;
  so.refine = c.refine;
  so.record_samples = !c.csv.empty();
  so.track_torus = true;
  const auto res = find_recurrence(sys.h, sys.rho0, c.threshold, grid, so, rep);
  j["result"] = to_json(res);
  j["skipped"] = 0;
  if (c.surrogate) {
    const double r = std::sqrt(2.0 - 2.0 * c.threshold);
    Json s = to_json(torus_surrogate_scan(sys.h, sys.rho0, r, grid, std::nullopt, c.reduce_support));
    s["radius"] = number(r);
    j["surrogate"] = s;
  }
  if (!c.csv.empty()) {
    std::ofstream f(c.csv, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + c.csv);
    write_samples_csv(f, res);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + c.csv);
    j["csv"] = c.csv;
  }
  return j;
}

Json cmd_strobe(const RunConfig& c) {
  require_threshold(c.threshold);
  if (!c.step || !(*c.step > 0.0)) throw Error(ErrorKind::BadParameter, "--step must be positive");
  const auto sys = need_system(c);
  Json j = header(c, sys);
  j["epsilon"] = number(c.threshold);
  j["epsilon_convention"] = "F(rho0, rho(j t)) >= epsilon";
  j["step"] = number(*c.step);
  j["jmax_cap"] = c.jmax_cap;
  j["result"] = to_json(stroboscopic_recurrence(sys.h, sys.rho0, c.threshold, *c.step, c.jmax_cap));
  return j;
}

Json cmd_truncate(const RunConfig& c) {
  require_threshold(c.threshold);
  const auto sys = need_system(c);
  const auto tr = maybe_truncate(c, sys.rho0);
  if (!tr) throw Error(ErrorKind::BadParameter, "--N or --delta-target is required");
  Json j = header(c, sys);
  j["truncation"] = to_json(*tr);
  j["corollary"] = corollaries(c, sys, *tr);
  return j;
}

Json cmd_verify(const RunConfig& c, bool& all_passed) {
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(c.suite);
  }
  Json suites = Json::array();
  all_passed = true;
  for (const auto& name : names) {
    const auto r = verify::run_suite(name, c.seed);
    all_passed = all_passed && r.passed;
    suites.push_back(verify::to_json(r));
  }
  return Json{{"command", "verify"}, {"seed", c.seed}, {"passed", all_passed}, {"suites", suites}};
}

Json cmd_geometry(const RunConfig& c) {
  Json j{{"command", "geometry"}};
  bool any = false;
  if (!c.input.empty()) {
    const auto sys = load_system(c.input);
    const auto torus = torus_from_state(sys.rho0, c.reduce_support);
    const double lambda = energy_stats(sys.h, sys.rho0).mean;
    Json radii = Json::array();
    for (double g : torus.radii()) radii.push_back(number(g));
    Json t{{"radii", radii},
           {"injectivity_radius", number(injectivity_radius(torus))},
           {"volume", number(torus_volume(torus))},
           {"log_volume", number(log_torus_volume(torus))},
           {"hbar", number(sys.h.hbar())},
           {"lambda", number(lambda)}};
    if (torus.dim() == sys.h.dim()) t["geodesic_speed"] = number(geodesic_speed(torus, sys.h, lambda));
    j["torus"] = t;
    any = true;
  }
  if (!c.metric_space.empty()) {
    if (!c.r) throw Error(ErrorKind::BadParameter, "--r is required with --metric-space");
    const auto spec = parse_metric_space(read_json_file(c.metric_space));
    Json m = to_json(metric_recurrence_oracle(spec.space, spec.perm, c.point, *c.r));
    m["point"] = c.point;
    m["r"] = number(*c.r);
    j["metric_recurrence"] = m;
    any = true;
  }
  if (c.sphere_n) {
    j["sphere_ball"] = {{"n", *c.sphere_n},
                        {"radius", number(c.radius)},
                        {"volume", number(sphere_ball_volume(*c.sphere_n, c.radius))}};
    any = true;
  }
  if (c.tube_n) {
    j["tube"] = {{"n", *c.tube_n},
                 {"theta", number(c.theta)},
                 {"length", number(c.length)},
                 {"volume", number(tube_volume(*c.tube_n, c.theta, c.length))}};
    any = true;
  }
  if (!any) {
    throw Error(ErrorKind::BadParameter, "geometry needs --input, --metric-space, --sphere-n or --tube-n");
  }
  return j;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::Bounds: return "bounds";
    case Command::Search: return "search";
    case Command::Strobe: return "strobe";
    case Command::Truncate: return "truncate";
    case Command::Verify: return "verify";
    case Command::Geometry: return "geometry";
  }
  return "?";
}

int run(const RunConfig& c, std::ostream& out) {
  try {
    int code = kExitOk;
    Json j;
    switch (c.command) {
      case Command::Bounds: j = cmd_bounds(c); break;
      case Command::Search: j = cmd_search(c); break;
      case Command::Strobe: j = cmd_strobe(c); break;
      case Command::Truncate: j = cmd_truncate(c); break;
      case Command::Geometry: j = cmd_geometry(c); break;
      case Command::Verify: {
        bool ok = false;
        j = cmd_verify(c, ok);
        if (!ok) code = kExitPrecondition;
        break;
      }
    }
    emit(j, c.output, out);
    return code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    const Json j = error_json(c, qrec::to_string(e.kind()), e.what(), e.details());
    try {
      emit(j, c.output, out);
    } catch (const Error&) {
      std::cerr << j.dump() << '\n';
    }
    return code;
  } catch (const nlohmann::json::exception& e) {
    emit(error_json(c, "ParseError", e.what()), c.output, out);
    return kExitIo;
  }
}

int run(const RunConfig& config) { return run(config, std::cout); }

std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code) {
  CLI::App app{"Quantum recurrence time bounds and simulation"};
  app.require_subcommand(1);
  RunConfig c;
  std::string dt = "auto", horizon = "auto", order = "energy";
  bool no_reduce = false;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", c.input, "system spec JSON");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", c.output, "report path (default stdout)");
    sub->add_option("--threshold", c.threshold, "fidelity threshold in (0, 1)");
    sub->add_flag("--no-reduce-support", no_reduce, "keep zero-population levels");
  };
  auto trunc = [&](CLI::App* sub) {
    sub->add_option("--N", c.n_relevant, "number of relevant levels");
    sub->add_option("--delta-target", c.delta_target, "largest admissible tail weight");
    sub->add_option("--order", order, "energy | population")->check(CLI::IsMember({"energy", "population"}));
    sub->add_option("--step", c.step, "stroboscopic step t");
  };

  auto* bounds = app.add_subcommand("bounds", "recurrence time bounds for a system");
  common(bounds, true);
  trunc(bounds);

  auto* search = app.add_subcommand("search", "simulate and measure t_rec");
  common(search, true);
  search->add_option("--csv", c.csv, "time series output");
  search->add_option("--dt", dt, "auto or a step");
  search->add_option("--horizon", horizon, "auto or a time span");
  search->add_option("--t0", c.t0, "grid start");
  search->add_flag("--refine", c.refine, "bisect the return crossing");
  search->add_flag("--allow-coarse", c.allow_coarse, "accept a dt above the Nyquist-tied limit");
  search->add_flag("--surrogate", c.surrogate, "also scan the flat-torus surrogate");

  auto* strobe = app.add_subcommand("strobe", "stroboscopic return j with F >= threshold");
  common(strobe, true);
  strobe->add_option("--step", c.step, "stroboscopic step t")->required();
  strobe->add_option("--jmax-cap", c.jmax_cap, "largest j to try");

  auto* truncate_cmd = app.add_subcommand("truncate", "truncation weights and corollary ceilings");
  common(truncate_cmd, true);
  trunc(truncate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", c.suite, "all or one suite name");
  verify_cmd->add_option("--seed", c.seed, "master seed");
  verify_cmd->add_option("--output,-o", c.output, "report path (default stdout)");

  auto* geometry = app.add_subcommand("geometry", "torus, sphere, tube and metric recurrence checks");
  common(geometry, false);
  geometry->add_option("--metric-space", c.metric_space, "finite metric space JSON")->check(CLI::ExistingFile);
  geometry->add_option("--point", c.point, "start point index");
  geometry->add_option("--r", c.r, "recurrence radius");
  geometry->add_option("--sphere-n", c.sphere_n, "sphere dimension");
  geometry->add_option("--radius", c.radius, "ball radius");
  geometry->add_option("--tube-n", c.tube_n, "ambient dimension");
  geometry->add_option("--theta", c.theta, "tube radius");
  geometry->add_option("--length", c.length, "geodesic length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e) == 0 ? kExitOk : kExitIo;
    return std::nullopt;
  }

  auto parse_auto = [&](const std::string& s, const char* name) -> std::optional<double> {
    if (s == "auto") return std::nullopt;
    double v = 0.0;
    std::istringstream is(s);
    if (!(is >> v) || !is.eof() || !(v > 0.0)) {
      std::cerr << name << " must be auto or a positive number\n";
      exit_code = kExitIo;
      throw std::invalid_argument(name);
    }
    return v;
  };
  try {
    c.dt = parse_auto(dt, "--dt");
    c.horizon = parse_auto(horizon, "--horizon");
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  c.order = order == "population" ? TruncationOrder::Population : TruncationOrder::Energy;
  c.reduce_support = !no_reduce;
  if (bounds->parsed()) c.command = Command::Bounds;
  if (search->parsed()) c.command = Command::Search;
  if (strobe->parsed()) c.command = Command::Strobe;
  if (truncate_cmd->parsed()) c.command = Command::Truncate;
  if (verify_cmd->parsed()) c.command = Command::Verify;
  if (geometry->parsed()) c.command = Command::Geometry;
  exit_code = kExitOk;
  return c;
}

}  // namespace qrec::cli
