#include "qrec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace qrec {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Complex parse_complex(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    parse_fail("complex entries must be [re, im] pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<double> parse_reals(const Json& v, const char* field) {
  if (!v.is_array()) parse_fail(std::string(field) + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) parse_fail(std::string(field) + " must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

SystemSpec parse_system(const Json& j) {
  if (!j.is_object()) parse_fail("system spec must be an object");
  if (!j.contains("energies")) parse_fail("missing field: energies");
  const double hbar = j.contains("hbar") ? j.at("hbar").get<double>() : 1.0;
  Hamiltonian h(parse_reals(j.at("energies"), "energies"), hbar);
  if (!j.contains("state") || !j.at("state").is_object() || j.at("state").size() != 1) {
    parse_fail("state must be an object with exactly one of matrix, pure, diagonal, gibbs");
  }
  const auto& st = j.at("state");
  const std::string kind = st.begin().key();
  const Json& body = st.begin().value();
  const auto n = static_cast<Eigen::Index>(h.dim());
  auto check_dim = [&](std::size_t got) {
    if (got != h.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "state dimension differs from the number of energies",
                  {{"state_dim", static_cast<double>(got)}, {"energies", static_cast<double>(h.dim())}});
    }
  };
  if (kind == "matrix") {
    if (!body.is_array()) parse_fail("matrix must be an array of rows");
    check_dim(body.size());
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = body[static_cast<std::size_t>(r)];
      if (!row.is_array()) parse_fail("matrix rows must be arrays");
      check_dim(row.size());
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
    }
    return {std::move(h), validate_density(m), kind};
  }
  if (kind == "pure") {
    if (!body.is_array()) parse_fail("pure must be an array of amplitudes");
    check_dim(body.size());
    std::vector<Complex> amps;
    for (const auto& a : body) amps.push_back(parse_complex(a));
    return {std::move(h), pure_state(AmplitudeVector(std::move(amps))), kind};
  }
  if (kind == "diagonal") {
    const auto p = parse_reals(body, "diagonal");
    check_dim(p.size());
    return {std::move(h), diagonal_state(p), kind};
  }
  if (kind == "gibbs") {
    if (!body.is_object() || !body.contains("beta")) parse_fail("gibbs needs a beta field");
    auto rho = gibbs_state(h, body.at("beta").get<double>());
    return {std::move(h), std::move(rho), kind};
  }
  parse_fail("unknown state kind: " + kind);
}

SystemSpec load_system(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return parse_system(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad system spec: ") + e.what());
  }
}

MetricSpaceSpec parse_metric_space(const Json& j) {
  try {
    const auto& d = j.at("dist");
    const std::size_t m = d.size();
    RMatrix dist(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t a = 0; a < m; ++a) {
      if (d[a].size() != m) parse_fail("dist must be square");
      for (std::size_t b = 0; b < m; ++b) {
        dist(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = d[a][b].get<double>();
      }
    }
    std::vector<std::string> labels;
    if (j.contains("points")) {
      for (const auto& p : j.at("points")) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    }
    auto measure = j.contains("measure") ? parse_reals(j.at("measure"), "measure")
                                         : std::vector<double>(m, 1.0);
    std::vector<std::size_t> perm;
    for (const auto& x : j.at("permutation")) perm.push_back(x.get<std::size_t>());
    return {FiniteMetricSpace(std::move(labels), std::move(dist), std::move(measure)), std::move(perm)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad metric space: ") + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Thm1Bound& b) {
  return Json{{"jmax", number(b.jmax)},
              {"log_jmax", number(b.log_jmax)},
              {"infinite", b.infinite},
              {"saturated", b.saturated}};
}

Json to_json(const BoundReport& r) {
  Json radii = Json::array();
  for (double g : r.torus_radii) radii.push_back(number(g));
  return Json{
      {"n", r.n},
      {"original_n", r.original_n},
      {"support", r.support},
      {"hbar", number(r.hbar)},
      {"threshold", number(r.threshold)},
      {"epsilon", number(r.epsilon)},
      {"thm1_epsilon", number(r.thm1_epsilon)},
      {"epsilon_convention",
       "energy bracket: F >= 1 - epsilon^2/4; dimension bound: F >= thm1_epsilon"},
      {"lambda", number(r.lambda)},
      {"delta_e", number(r.delta_e)},
      {"lower_mt", number(r.lower_mt)},
      {"upper_thm2", number(r.upper_thm2)},
      {"upper_thm2_simplified", number(r.upper_thm2_simplified)},
      {"log_upper_thm2", number(r.log_upper_thm2)},
      {"log_upper_thm2_simplified", number(r.log_upper_thm2_simplified)},
      {"log_c_n", number(r.log_c_n)},
      {"log_population_product", number(r.log_population_product)},
      {"thm1", to_json(r.thm1)},
      {"preconditions",
       {{"thm2_applies", r.preconditions.thm2_applies},
        {"support_reduced", r.preconditions.support_reduced},
        {"thm1_infinite", r.preconditions.thm1_infinite},
        {"max_admissible_epsilon", number(r.preconditions.max_admissible_epsilon)}}},
      {"torus_radii", radii},
      {"norms", {{"distance_ceiling", "trace norm (Fuchs-van de Graaf)"}}}};
}

Json to_json(const CorollaryReport& r) {
  Json j{{"mode", r.mode == CorollaryMode::Energy ? "energy" : "dimension"},
         {"N", r.n_relevant},
         {"epsilon", number(r.epsilon)},
         {"delta_N", number(r.delta_n)},
         {"P_N", number(r.p_n)},
         {"ceiling", number(r.ceiling)},
         {"ceiling_norm", "Hilbert-Schmidt for the truncation term, trace norm for the recurrence term"}};
  if (r.energy) j["bounds"] = to_json(*r.energy);
  if (r.mode == CorollaryMode::Dimension) {
    j["thm1"] = to_json(r.thm1);
    if (r.step) j["step"] = number(*r.step);
    if (r.upper_time) j["upper_time"] = number(*r.upper_time);
  }
  return j;
}

Json to_json(const TruncationResult& r, bool include_block) {
  Json j{{"N", r.n_relevant},
         {"order", to_string(r.order)},
         {"indices", r.indices},
         {"delta_N", number(r.delta_n)},
         {"P_N", number(r.p_n)},
         {"cross_weight", number(r.cross_weight)},
         {"complement_hs2", number(r.complement_hs2)},
         {"norm", "Hilbert-Schmidt (squared)"}};
  if (include_block) j["sigma_tilde"] = matrix_to_json(r.sigma_tilde.matrix());
  return j;
}

Json to_json(const Grid& g) {
  return Json{{"t0", number(g.t0)}, {"dt", number(g.dt)}, {"steps", g.steps}};
}

namespace {
template <class T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) return number(*v);
  else return *v;
}
}  // namespace

Json to_json(const RecurrenceResult& r) {
  Json j{{"threshold", number(r.threshold)},
         {"definition", kRecurrenceDefinition},
         {"grid", to_json(r.grid)},
         {"stationary", r.stationary},
         {"t_departure", opt(r.t_departure)},
         {"t_rec", opt(r.t_rec)},
         {"departure_index", opt(r.departure_index)},
         {"rec_index", opt(r.rec_index)},
         {"t_rec_refined", opt(r.t_rec_refined)},
         {"fidelity_at_rec", number(r.fidelity_at_rec)},
         {"bures_at_rec", number(r.bures_at_rec)},
         {"samples_scanned", r.samples_scanned},
         {"lambda", number(r.lambda)},
         {"max_fidelity_step", number(r.max_fidelity_step)},
         {"lipschitz_bound", number(r.lipschitz_bound)},
         {"torus_defined", r.torus_defined},
         {"submersion", {{"checked", r.submersion_checked},
                         {"violations", r.submersion_violations},
                         {"max_excess", number(r.max_submersion_excess)}}}};
  if (r.bracket.applicable || r.bracket.upper_thm2 > 0.0) {
    j["bracket"] = {{"applicable", r.bracket.applicable},
                    {"lower_mt", number(r.bracket.lower_mt)},
                    {"upper_thm2", number(r.bracket.upper_thm2)},
                    {"slack", number(r.bracket.slack)},
                    {"lower_ok", r.bracket.lower_ok},
                    {"upper_ok", r.bracket.upper_ok}};
  }
  return j;
}

Json to_json(const StroboscopicResult& r) {
  return Json{{"j_found", opt(r.j_found)},
              {"fidelity_at_j", number(r.fidelity_at_j)},
              {"jmax_theory", to_json(r.theory)},
              {"search_limit", r.search_limit},
              {"cap_exceeded", r.cap_exceeded}};
}

Json to_json(const SurrogateResult& r) {
  return Json{{"departed", r.departed},
              {"t_departure", opt(r.t_departure)},
              {"t_surrogate", opt(r.t_surrogate)},
              {"torus_at_surrogate", number(r.torus_at_surrogate)},
              {"bures_at_surrogate", number(r.bures_at_surrogate)},
              {"witness_ok", r.witness_ok},
              {"lambda", number(r.lambda)}};
}

Json to_json(const MetricRecurrence& r) {
  return Json{{"N_r", r.n_r},
              {"bound", number(r.bound)},
              {"ball_measure", number(r.ball_measure)},
              {"ok", r.ok},
              {"ball_empty", r.ball_empty},
              {"orbit_length", r.orbit_length},
              {"ball_convention", "open ball d(p, x) < r/2"}};
}

void write_samples_csv(std::ostream& os, const RecurrenceResult& r) {
  os << "t,fidelity,bures,trace_dist,hs_dist,torus_dist\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    os << format_double(s.t) << ',' << format_double(s.fidelity) << ',' << format_double(s.bures) << ','
       << format_double(s.trace_dist) << ',' << format_double(s.hs_dist) << ',';
    if (i < r.torus_dist.size() && r.torus_dist[i]) os << format_double(*r.torus_dist[i]);
    os << '\n';
  }
}

}  // namespace qrec
