#include "qrec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qrec/evolution.hpp"
#include "qrec/special.hpp"

namespace qrec::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct RandomSystem {
  Hamiltonian h;
  DensityMatrix rho;
};

RandomSystem random_system(std::size_t n, std::uint64_t seed) {
  return {model_hamiltonian(RandomSpectrumModel{n, seed}), random_density(n, derive_seed(seed, 1))};
}

DensityMatrix random_pure(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> v(n);
  double norm2 = 0.0;
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
    norm2 += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm2);
  // Renormalize through the amplitude check's tolerance.
  return pure_state(AmplitudeVector(std::move(v)));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace

Json to_json(const SuiteResult& r) {
  return Json{{"name", r.name},
              {"passed", r.passed},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"violations", r.violations},
              {"worst", number(r.worst)},
              {"detail", r.detail}};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over (master, index)
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SuiteResult qubit_example() {
  SuiteResult out;
  out.name = "qubit_example";
  const Hamiltonian h({0.0, 1.0});
  const double s = 1.0 / std::sqrt(2.0);
  const auto rho = pure_state(AmplitudeVector({s, s}));
  const double threshold = 0.999;
  const double eps = thm2_epsilon_from_threshold(threshold);
  const auto rep = thm2_bounds(h, rho, eps);
  const Grid grid = auto_grid(h, rep);
  SearchOptions opts;
  opts.track_torus = true;
  const auto res = find_recurrence(h, rho, threshold, grid, opts, rep);
  out.checked = 1;
  const bool found = res.t_rec.has_value();
  const double t_rec = found ? *res.t_rec : 0.0;
  const bool near_period = found && std::abs(t_rec - 2.0 * kPi) <= grid.dt;
  const bool bracket = res.bracket.applicable && res.bracket.lower_ok && res.bracket.upper_ok;
  const bool lower_closed = std::abs(rep.lower_mt - 2.0 * eps) <= 1e-12;
  const bool upper_closed = std::abs(rep.upper_thm2 - 4.0 * kPi * kPi / eps) <= 1e-9 * rep.upper_thm2;
  out.passed = near_period && bracket && lower_closed && upper_closed && res.submersion_violations == 0;
  out.violations = out.passed ? 0 : 1;
  out.worst = found ? std::abs(t_rec - 2.0 * kPi) : 0.0;
  out.detail = {{"epsilon", number(eps)},
                {"dt", number(grid.dt)},
                {"t_rec", found ? number(t_rec) : Json(nullptr)},
                {"lower_mt", number(rep.lower_mt)},
                {"upper_thm2", number(rep.upper_thm2)},
                {"submersion_checked", res.submersion_checked},
                {"submersion_violations", res.submersion_violations},
                {"submersion_max_excess", number(res.max_submersion_excess)}};
  return out;
}

SuiteResult bracket_ensemble(std::uint64_t seed, const BracketOptions& opts) {
  SuiteResult out;
  out.name = "bracket_ensemble";
  std::size_t never_departed = 0, stationary = 0, lower_fail = 0, upper_fail = 0, no_return = 0;
  std::size_t submersion_checked = 0, submersion_violations = 0, fvg_checked = 0, fvg_violations = 0;
  double submersion_excess = -1.0, fvg_worst = -1.0;
  double min_lower_ratio = std::numeric_limits<double>::infinity();
  double max_upper_ratio = 0.0;
  std::size_t samples_total = 0;
  Json skipped_list = Json::array();

  for (std::size_t i = 0; i < opts.instances; ++i) {
    const std::size_t n = 2 + i % 4;
    const std::uint64_t s = derive_seed(seed, i);
    const auto sys = random_system(n, s);
    std::mt19937_64 rng(derive_seed(s, 2));
    const double eps_max = kPi * std::sqrt(sys.rho.populations().minCoeff());
    const double eps = log_uniform(rng, 0.01, 0.95) * std::min(eps_max, 1.9);
    const double threshold = threshold_from_thm2_epsilon(eps);

    BoundReport rep;
    try {
      rep = thm2_bounds(sys.h, sys.rho, eps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::StationaryState) throw;
      ++stationary;
      ++out.skipped;
      continue;
    }
    const double dt = default_dt(sys.h);
    if (!(rep.upper_thm2 / dt + 2.0 <= static_cast<double>(opts.max_samples))) {
      ++out.skipped;
      skipped_list.push_back({{"instance", i}, {"n", n}, {"samples_needed", number(rep.upper_thm2 / dt)}});
      continue;
    }
    const Grid grid = grid_for_horizon(0.0, dt, rep.upper_thm2 + dt, opts.max_samples);
    SearchOptions so;
    so.track_torus = true;
    const auto res = find_recurrence(sys.h, sys.rho, threshold, grid, so, rep);
    ++out.checked;
    samples_total += res.samples_scanned;
    submersion_checked += res.submersion_checked;
    submersion_violations += res.submersion_violations;
    submersion_excess = std::max(submersion_excess, res.max_submersion_excess);

    if (!res.t_departure) {
      ++never_departed;  // F >= threshold over the whole bracket
      continue;
    }
    if (!res.t_rec) {
      ++no_return;
      ++upper_fail;
      ++out.violations;
      continue;
    }
    min_lower_ratio = std::min(min_lower_ratio, *res.t_rec / rep.lower_mt);
    max_upper_ratio = std::max(max_upper_ratio, *res.t_rec / rep.upper_thm2);
    if (!res.bracket.lower_ok) ++lower_fail;
    if (!res.bracket.upper_ok) ++upper_fail;
    if (!res.bracket.lower_ok || !res.bracket.upper_ok) ++out.violations;

    const auto rho_t = evolve(make_kernel(sys.h, sys.rho), *res.t_rec);
    const double tn = trace_distance_norm(rho_t, sys.rho);
    const double ceiling = 2.0 * eps * eps * (1.0 - eps * eps / 8.0);
    ++fvg_checked;
    fvg_worst = std::max(fvg_worst, tn * tn - ceiling);
    if (tn * tn > ceiling + 1e-6) ++fvg_violations;
  }
  out.violations += submersion_violations + fvg_violations;
  out.passed = out.violations == 0;
  out.worst = max_upper_ratio;
  out.detail = {{"instances", opts.instances},
                {"max_samples", opts.max_samples},
                {"never_departed", never_departed},
                {"stationary", stationary},
                {"lower_violations", lower_fail},
                {"upper_violations", upper_fail},
                {"no_return_within_horizon", no_return},
                {"min_t_rec_over_lower", number(min_lower_ratio)},
                {"max_t_rec_over_upper", number(max_upper_ratio)},
                {"samples_scanned", samples_total},
                {"submersion_checked", submersion_checked},
                {"submersion_violations", submersion_violations},
                {"submersion_max_excess", number(submersion_excess)},
                {"fvg_trace_norm_checked", fvg_checked},
                {"fvg_trace_norm_violations", fvg_violations},
                {"fvg_trace_norm_worst_excess", number(fvg_worst)},
                {"skipped_instances", skipped_list}};
  return out;
}

SuiteResult stroboscopic_ensemble(std::uint64_t seed, std::size_t instances, double epsilon,
                                  std::size_t cap) {
  SuiteResult out;
  out.name = "stroboscopic_ensemble";
  std::size_t theory_within_cap = 0, found = 0;
  std::size_t max_j = 0;
  double jmax = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const auto sys = random_system(2, s);
    std::mt19937_64 rng(derive_seed(s, 3));
    const double step = uniform(rng, 0.1, 10.0);
    const auto res = stroboscopic_recurrence(sys.h, sys.rho, epsilon, step, cap);
    jmax = res.theory.jmax;
    ++out.checked;
    const bool decidable = std::ceil(res.theory.jmax) <= static_cast<double>(cap);
    if (decidable) ++theory_within_cap;
    if (res.j_found) {
      ++found;
      max_j = std::max(max_j, *res.j_found);
      if (static_cast<double>(*res.j_found) > std::ceil(res.theory.jmax)) ++out.violations;
    } else if (decidable) {
      ++out.violations;
    } else {
      ++out.skipped;
    }
  }
  out.passed = out.violations == 0;
  out.worst = static_cast<double>(max_j);
  out.detail = {{"epsilon", number(epsilon)},
                {"cap", cap},
                {"jmax_theory", number(jmax)},
                {"instances_with_theory_within_cap", theory_within_cap},
                {"found", found},
                {"max_j_found", max_j}};
  return out;
}

SuiteResult fvg_pairs(std::uint64_t seed, std::size_t pairs) {
  SuiteResult out;
  out.name = "fvg_pairs";
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t n = 2 + i % 3;
    const std::uint64_t s = derive_seed(seed, i);
    const bool pure = i % 5 == 4;
    const auto rho = pure ? random_pure(n, s) : random_density(n, s);
    const auto sigma = pure ? random_pure(n, derive_seed(s, 1)) : random_density(n, derive_seed(s, 1));
    const auto c = fvg_check(rho, sigma);
    ++out.checked;
    worst = std::max({worst, c.one_minus_f - c.half_trace, c.half_trace - c.sqrt_one_minus_f2});
    if (!c.lower_ok || !c.upper_ok) ++out.violations;
  }
  out.passed = out.violations == 0;
  out.worst = worst;
  out.detail = {{"pairs", pairs}, {"slack", number(tol::kFvgSlack)}};
  return out;
}

SuiteResult truncation_suite(std::uint64_t seed, std::size_t systems, std::size_t times) {
  SuiteResult out;
  out.name = "truncation";
  constexpr std::size_t n = 6, big_n = 3;
  double tail_dev = 0.0, drift = 0.0, literal_gap = 0.0, trace_drift = 0.0;
  std::size_t ceiling_checked = 0, ceiling_violations = 0, ceiling_skipped = 0;
  std::size_t skip_horizon = 0, skip_no_return = 0, never_departed = 0;
  // Triangle chain at every sampled time, with the tail weight alone and
  // with the full complement (tail plus cross blocks).
  std::size_t chain_checked = 0, chain_tail_violations = 0, chain_full_violations = 0;
  double chain_tail_worst = -std::numeric_limits<double>::infinity();
  double ceiling_margin = std::numeric_limits<double>::infinity();
  double max_trace_ratio = 0.0;
  for (std::size_t i = 0; i < systems; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const auto sys = random_system(n, s);
    std::mt19937_64 rng(derive_seed(s, 4));
    std::vector<double> ts(times);
    for (double& t : ts) t = uniform(rng, 0.0, 1000.0);
    const auto inv = delta_time_invariance_check(sys.h, sys.rho, big_n, ts);
    tail_dev = std::max(tail_dev, inv.tail_deviation);
    drift = std::max(drift, inv.complement_drift);
    literal_gap = std::max(literal_gap, inv.literal_gap);
    trace_drift = std::max(trace_drift, inv.trace_drift);
    ++out.checked;
    if (inv.tail_deviation > 1e-9 || inv.complement_drift > 1e-9) ++out.violations;

    const auto tr = truncate(sys.rho, big_n);
    const Hamiltonian hn = sys.h.restricted(tr.indices);
    {
      const auto k_full = make_kernel(sys.h, sys.rho);
      const auto k_trunc = make_kernel(hn, tr.sigma_tilde);
      for (double t : ts) {
        const double lhs = hs_norm(evolve(k_full, t).matrix() - sys.rho.matrix());
        const double mid = tr.p_n * hs_norm(evolve(k_trunc, t).matrix() - tr.sigma_tilde.matrix());
        const double excess = lhs - (2.0 * std::sqrt(tr.delta_n) + mid);
        chain_tail_worst = std::max(chain_tail_worst, excess);
        ++chain_checked;
        if (excess > 1e-12) ++chain_tail_violations;
        if (lhs > 2.0 * std::sqrt(tr.complement_hs2) + mid + 1e-12) ++chain_full_violations;
      }
    }
    const double eps_max = kPi * std::sqrt(tr.sigma_tilde.populations().minCoeff());
    const double eps = log_uniform(rng, 0.01, 0.95) * std::min(eps_max, 1.9);
    const auto cor = corollary_bounds(sys.h, tr, eps, CorollaryMode::Energy);
    const double dt = default_dt(hn);
    if (!(cor.energy->upper_thm2 / dt + 2.0 <= 1e6)) {
      ++ceiling_skipped;
      ++skip_horizon;
      continue;
    }
    const Grid grid = grid_for_horizon(0.0, dt, cor.energy->upper_thm2 + dt, 1'000'000);
    const auto res = find_recurrence(hn, tr.sigma_tilde, threshold_from_thm2_epsilon(eps), grid, {},
                                     cor.energy);
    if (!res.t_departure) {
      ++never_departed;
      continue;
    }
    if (!res.t_rec) {
      ++ceiling_skipped;
      ++skip_no_return;
      continue;
    }
    const auto rho_t = evolve(make_kernel(sys.h, sys.rho), *res.t_rec);
    const double hs = hs_norm(rho_t.matrix() - sys.rho.matrix());
    const double tn = trace_distance_norm(rho_t, sys.rho);
    ++ceiling_checked;
    ceiling_margin = std::min(ceiling_margin, cor.ceiling - hs);
    max_trace_ratio = std::max(max_trace_ratio, tn / cor.ceiling);
    if (hs > cor.ceiling) {
      ++ceiling_violations;
      ++out.violations;
    }
  }
  out.skipped = ceiling_skipped;
  out.passed = out.violations == 0;
  out.worst = std::max(tail_dev, drift);
  out.detail = {{"n", n},
                {"N", big_n},
                {"times_per_system", times},
                {"tail_deviation", number(tail_dev)},
                {"complement_drift", number(drift)},
                {"literal_gap_cross_block_weight", number(literal_gap)},
                {"trace_drift", number(trace_drift)},
                {"chain_checked", chain_checked},
                {"chain_tail_only_violations", chain_tail_violations},
                {"chain_tail_only_worst_excess", number(chain_tail_worst)},
                {"chain_with_cross_violations", chain_full_violations},
                {"ceiling_norm", "Hilbert-Schmidt"},
                {"ceiling_checked", ceiling_checked},
                {"ceiling_skipped", ceiling_skipped},
                {"ceiling_skipped_horizon", skip_horizon},
                {"ceiling_skipped_no_return", skip_no_return},
                {"ceiling_never_departed", never_departed},
                {"ceiling_violations", ceiling_violations},
                {"ceiling_min_margin", number(ceiling_margin)},
                {"trace_norm_over_ceiling_max", number(max_trace_ratio)}};
  return out;
}

SuiteResult geometry_closed_forms() {
  SuiteResult out;
  out.name = "geometry_closed_forms";
  double worst = 0.0;
  const double full[] = {2.0 * kPi, 4.0 * kPi, 2.0 * kPi * kPi};
  for (std::size_t n = 1; n <= 3; ++n) {
    const double v = sphere_ball_volume(n, kPi);
    const double err = std::abs(v - full[n - 1]) / full[n - 1];
    worst = std::max(worst, err);
    ++out.checked;
    if (err > 1e-10) ++out.violations;
  }
  for (double theta : {0.01, 0.1, 0.37, 1.0}) {
    for (double len : {0.5, 3.0, 250.0}) {
      const double e2 = std::abs(tube_volume(2, theta, len) - 2.0 * theta * len) / (2.0 * theta * len);
      const double e3 = std::abs(tube_volume(3, theta, len) - kPi * theta * theta * len) / (kPi * theta * theta * len);
      worst = std::max({worst, e2, e3});
      out.checked += 2;
      if (e2 > 1e-12) ++out.violations;
      if (e3 > 1e-12) ++out.violations;
    }
  }
  out.passed = out.violations == 0;
  out.worst = worst;
  return out;
}

namespace {

struct Instance {
  std::string kind;
  RMatrix dist;
  std::vector<std::size_t> perm;
};

Instance cycle_instance(std::mt19937_64& rng) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(3, 24)(rng);
  Instance in{"cycle", RMatrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)), {}};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t d = a > b ? a - b : b - a;
      in.dist(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = static_cast<double>(std::min(d, m - d));
    }
  }
  const std::size_t shift = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  const bool reflect = std::bernoulli_distribution(0.3)(rng);
  for (std::size_t a = 0; a < m; ++a) in.perm.push_back(reflect ? (shift + m - a) % m : (a + shift) % m);
  return in;
}

Instance circle_instance(std::mt19937_64& rng) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(3, 30)(rng);
  const double radius = uniform(rng, 0.2, 5.0);
  const bool chord = std::bernoulli_distribution(0.5)(rng);
  Instance in{chord ? "circle_chord" : "circle_arc", RMatrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)), {}};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t d = a > b ? a - b : b - a;
      const double angle = 2.0 * kPi * static_cast<double>(std::min(d, m - d)) / static_cast<double>(m);
      in.dist(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          chord ? 2.0 * radius * std::sin(0.5 * angle) : radius * angle;
    }
  }
  const std::size_t shift = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  for (std::size_t a = 0; a < m; ++a) in.perm.push_back((a + shift) % m);
  return in;
}

// Leaves of a complete tree; distance is the height of the lowest common
// ancestor. Automorphisms permute the children of each internal node.
Instance ultrametric_instance(std::mt19937_64& rng) {
  const std::size_t depth = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const std::size_t branch = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  std::vector<double> height(depth + 1, 0.0);
  for (std::size_t l = 1; l <= depth; ++l) height[l] = height[l - 1] + uniform(rng, 0.1, 2.0);
  std::size_t m = 1;
  for (std::size_t l = 0; l < depth; ++l) m *= branch;
  auto digits = [&](std::size_t leaf) {
    std::vector<std::size_t> d(depth);
    for (std::size_t l = depth; l-- > 0;) {
      d[l] = leaf % branch;
      leaf /= branch;
    }
    return d;
  };
  Instance in{"ultrametric", RMatrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)), {}};
  for (std::size_t a = 0; a < m; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < m; ++b) {
      const auto db = digits(b);
      std::size_t common = 0;
      while (common < depth && da[common] == db[common]) ++common;
      in.dist(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = height[depth - common];
    }
  }
  // One child permutation per internal node, keyed by the node's prefix.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> node_perm;
  for (std::size_t a = 0; a < m; ++a) {
    const auto da = digits(a);
    std::size_t image = 0;
    for (std::size_t l = 0; l < depth; ++l) {
      std::vector<std::size_t> prefix(da.begin(), da.begin() + static_cast<std::ptrdiff_t>(l));
      auto it = node_perm.find(prefix);
      if (it == node_perm.end()) {
        std::vector<std::size_t> p(branch);
        for (std::size_t c = 0; c < branch; ++c) p[c] = c;
        std::shuffle(p.begin(), p.end(), rng);
        it = node_perm.emplace(prefix, std::move(p)).first;
      }
      image = image * branch + it->second[da[l]];
    }
    in.perm.push_back(image);
  }
  return in;
}

}  // namespace

SuiteResult metric_recurrence_suite(std::uint64_t seed, std::size_t spaces) {
  SuiteResult out;
  out.name = "metric_recurrence";
  std::map<std::string, std::size_t> kinds;
  double tightest = 0.0;  // max N_r / bound
  for (std::size_t i = 0; i < spaces; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    Instance in = i % 3 == 0 ? cycle_instance(rng) : i % 3 == 1 ? circle_instance(rng) : ultrametric_instance(rng);
    const std::size_t m = in.perm.size();
    // Weights constant on the orbits of the map, so it preserves the measure.
    std::vector<double> measure(m, 0.0);
    std::vector<bool> seen(m, false);
    for (std::size_t a = 0; a < m; ++a) {
      if (seen[a]) continue;
      const double w = uniform(rng, 0.5, 2.0);
      for (std::size_t x = a; !seen[x]; x = in.perm[x]) {
        seen[x] = true;
        measure[x] = w;
      }
    }
    const FiniteMetricSpace space(in.dist, measure);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    const double r = uniform(rng, 1e-3, 1.2 * in.dist.maxCoeff());
    const auto res = metric_recurrence_oracle(space, in.perm, p, r);
    ++kinds[in.kind];
    ++out.checked;
    tightest = std::max(tightest, static_cast<double>(res.n_r) / res.bound);
    if (!res.ok) ++out.violations;
  }
  out.passed = out.violations == 0;
  out.worst = tightest;
  Json k = Json::object();
  for (const auto& [name, count] : kinds) k[name] = count;
  out.detail = {{"kinds", k}, {"max_n_r_over_bound", number(tightest)}};
  return out;
}

SuiteResult special_functions() {
  SuiteResult out;
  out.name = "special_functions";
  double worst_thm1 = 0.0, worst_routes = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double eps = 0.05 * i - 0.025;
    const double got = thm1_bound(1, eps).jmax;
    const double want = 4.0 / std::sqrt(2.0 - 2.0 * eps);
    const double err = std::abs(got - want) / want;
    worst_thm1 = std::max(worst_thm1, err);
    ++out.checked;
    if (err > 1e-12) ++out.violations;
  }
  for (unsigned m : {0u, 1u, 6u, 30u}) {
    for (double x : {0.1, 0.5, kPi / 2.0, kPi}) {
      const double err = std::abs(sin_power_integral(m, x) - sin_power_integral_reduction(m, x));
      worst_routes = std::max(worst_routes, err);
      ++out.checked;
      if (err > 1e-12) ++out.violations;
    }
  }
  out.passed = out.violations == 0;
  out.worst = std::max(worst_thm1, worst_routes);
  out.detail = {{"thm1_n1_max_rel_error", number(worst_thm1)},
                {"quadrature_vs_reduction_max_abs", number(worst_routes)}};
  return out;
}

SuiteResult lambda_invariance(std::uint64_t seed, std::size_t shifts) {
  SuiteResult out;
  out.name = "lambda_invariance";
  const auto sys = random_system(3, derive_seed(seed, 0));
  const double threshold = 0.95;
  const double dt = default_dt(sys.h);
  const Grid grid{0.0, dt, 200'000};
  SearchOptions so;
  so.workers = 1;
  const auto base = find_recurrence(sys.h, sys.rho, threshold, grid, so);
  std::mt19937_64 rng(derive_seed(seed, 1));
  Json lambdas = Json::array();
  for (std::size_t i = 0; i < shifts; ++i) {
    const double lambda = uniform(rng, -50.0, 50.0);
    lambdas.push_back(number(lambda));
    const auto res = find_recurrence(sys.h.shifted(lambda), sys.rho, threshold, grid, so);
    ++out.checked;
    if (res.departure_index != base.departure_index || res.rec_index != base.rec_index) ++out.violations;
  }
  out.passed = out.violations == 0;
  out.detail = {{"threshold", threshold},
                {"departure_index", base.departure_index ? Json(*base.departure_index) : Json(nullptr)},
                {"rec_index", base.rec_index ? Json(*base.rec_index) : Json(nullptr)},
                {"lambdas", lambdas}};
  return out;
}

std::vector<std::string> suite_names() {
  return {"qubit", "bracket", "strobe", "fvg", "truncation", "geometry", "metric", "special", "invariance"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "qubit") return qubit_example();
  if (name == "bracket") return bracket_ensemble(seed);
  if (name == "strobe") return stroboscopic_ensemble(seed);
  if (name == "fvg") return fvg_pairs(seed);
  if (name == "truncation") return truncation_suite(seed);
  if (name == "geometry") return geometry_closed_forms();
  if (name == "metric") return metric_recurrence_suite(seed);
  if (name == "special") return special_functions();
  if (name == "invariance") return lambda_invariance(seed);
  throw Error(ErrorKind::BadParameter, "unknown suite: " + name);
}

}  // namespace qrec::verify
