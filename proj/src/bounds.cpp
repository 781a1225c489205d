#include "qrec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qrec/metrics.hpp"
#include "qrec/special.hpp"

namespace qrec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogMax = std::log(std::numeric_limits<double>::max());

double saturating_exp(double x) { return x > kLogMax ? kInf : std::exp(x); }

}  // namespace

double thm2_epsilon_from_threshold(double fidelity_threshold) {
  if (!(fidelity_threshold > 0.0 && fidelity_threshold < 1.0)) {
    throw Error(ErrorKind::BadDomain, "fidelity threshold must lie in (0, 1)",
                {{"threshold", fidelity_threshold}});
  }
  return 2.0 * std::sqrt(1.0 - fidelity_threshold);
}

double threshold_from_thm2_epsilon(double epsilon) { return 1.0 - epsilon * epsilon / 4.0; }

Thm1Bound thm1_bound(std::size_t n, double epsilon) {
  if (n < 1) throw Error(ErrorKind::BadDomain, "dimension must be at least 1");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorKind::BadDomain, "epsilon must lie in (0, 1]", {{"epsilon", epsilon}});
  }
  Thm1Bound b;
  if (epsilon == 1.0) {
    b.jmax = kInf;
    b.log_jmax = kInf;
    b.infinite = true;
    return b;
  }
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const auto m = static_cast<unsigned>(2 * n * n - 2);
  const double upper = 0.5 * std::sqrt(2.0 - 2.0 * epsilon);
  b.log_jmax = 0.5 * std::log(kPi) + log_gamma_ratio(n2, n2 + 0.5) - log_sin_power_integral(m, upper);
  b.jmax = saturating_exp(b.log_jmax);
  b.saturated = std::isinf(b.jmax);
  return b;
}

double log_c_n(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadDomain, "c_n needs n >= 2");
  const double nn = static_cast<double>(n);
  return std::log(nn - 1.0) + std::lgamma(0.5 * (nn - 1.0)) + (nn - 1.0) * std::log(4.0) +
         0.5 * (nn + 1.0) * std::log(kPi);
}

double c_n_direct(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadDomain, "c_n needs n >= 2");
  const double nn = static_cast<double>(n);
  return (nn - 1.0) * std::tgamma(0.5 * (nn - 1.0)) * std::pow(4.0, nn - 1.0) *
         std::pow(kPi, 0.5 * (nn + 1.0));
}

BoundReport thm2_bounds(const Hamiltonian& h, const DensityMatrix& rho0, double epsilon,
                        bool reduce_support) {
  if (h.dim() != rho0.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and state dimensions differ");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::BadDomain, "epsilon must be positive", {{"epsilon", epsilon}});
  }
  BoundReport rep;
  rep.original_n = rho0.dim();
  rep.hbar = h.hbar();
  rep.epsilon = epsilon;
  rep.threshold = threshold_from_thm2_epsilon(epsilon);
  rep.thm1_epsilon = rep.threshold;

  SupportReduction red = reduce_support
                             ? reduce_to_support(rho0)
                             : SupportReduction{rho0, {}, false};
  if (!reduce_support) {
    red.kept.resize(rho0.dim());
    std::iota(red.kept.begin(), red.kept.end(), std::size_t{0});
  }
  const Hamiltonian hr = red.reduced ? h.restricted(red.kept) : h;
  const DensityMatrix& state = red.state;
  rep.n = state.dim();
  rep.support = red.kept;
  rep.preconditions.support_reduced = red.reduced;

  const auto stats = energy_stats(hr, state);
  rep.lambda = stats.mean;
  rep.delta_e = stats.uncertainty;

  double min_pop = kInf;
  double log_prod = 0.0;
  for (std::size_t k = 0; k < rep.n; ++k) {
    const double p = state.population(k);
    min_pop = std::min(min_pop, p);
    rep.torus_radii.push_back(std::sqrt(std::max(0.0, p)));
    log_prod += 0.5 * std::log(p);
  }
  rep.log_population_product = log_prod;
  rep.preconditions.max_admissible_epsilon = kPi * std::sqrt(std::max(0.0, min_pop));

  if (!(rep.delta_e > 1e-14) || rep.n < 2) {
    throw Error(ErrorKind::StationaryState, "state has zero energy uncertainty",
                {{"delta_e", rep.delta_e}, {"n", static_cast<double>(rep.n)}});
  }
  if (!(epsilon < rep.preconditions.max_admissible_epsilon)) {
    throw Error(ErrorKind::PreconditionViolated,
                "epsilon must be below pi * min_k sqrt(p_k)",
                {{"epsilon", epsilon},
                 {"max_admissible_epsilon", rep.preconditions.max_admissible_epsilon}});
  }
  rep.preconditions.thm2_applies = true;

  const double nn = static_cast<double>(rep.n);
  rep.log_c_n = log_c_n(rep.n);
  rep.lower_mt = epsilon * h.hbar() / rep.delta_e;
  const double log_common = std::log(h.hbar()) + rep.log_c_n - (nn - 1.0) * std::log(epsilon) -
                            std::log(rep.delta_e);
  rep.log_upper_thm2 = log_common + log_prod;
  rep.log_upper_thm2_simplified = log_common - 0.5 * nn * std::log(nn);
  rep.upper_thm2 = saturating_exp(rep.log_upper_thm2);
  rep.upper_thm2_simplified = saturating_exp(rep.log_upper_thm2_simplified);

  // The dimension-only bound at the same fidelity level. Its epsilon is a
  // fidelity in (0, 1]; thresholds at or below zero never constrain anything.
  if (rep.thm1_epsilon > 0.0) {
    rep.thm1 = thm1_bound(rep.n, std::min(1.0, rep.thm1_epsilon));
  } else {
    rep.thm1 = {1.0, 0.0, false, false};
  }
  rep.preconditions.thm1_infinite = rep.thm1.infinite;
  return rep;
}

double corollary_energy_ceiling(double delta_n, double p_n, double epsilon) {
  return 2.0 * std::sqrt(delta_n) +
         std::sqrt(2.0) * p_n * epsilon * std::sqrt(std::max(0.0, 1.0 - epsilon * epsilon / 8.0));
}

double corollary_dimension_ceiling(double delta_n, double p_n, double epsilon) {
  return 2.0 * std::sqrt(delta_n) + 2.0 * p_n * (1.0 - epsilon * epsilon);
}

CorollaryReport corollary_bounds(const Hamiltonian& h, const TruncationResult& trunc, double epsilon,
                                 CorollaryMode mode, std::optional<double> step) {
  CorollaryReport rep;
  rep.mode = mode;
  rep.n_relevant = trunc.n_relevant;
  rep.epsilon = epsilon;
  rep.delta_n = trunc.delta_n;
  rep.p_n = trunc.p_n;
  if (mode == CorollaryMode::Energy) {
    const Hamiltonian hn = h.restricted(trunc.indices);
    rep.energy = thm2_bounds(hn, trunc.sigma_tilde, epsilon);
    rep.ceiling = corollary_energy_ceiling(trunc.delta_n, trunc.p_n, epsilon);
  } else {
    rep.thm1 = thm1_bound(trunc.n_relevant, epsilon);
    rep.ceiling = corollary_dimension_ceiling(trunc.delta_n, trunc.p_n, epsilon);
    if (step) {
      if (!(*step > 0.0)) throw Error(ErrorKind::BadDomain, "stroboscopic step must be positive");
      rep.step = step;
      rep.upper_time = rep.thm1.jmax * *step;
    }
  }
  return rep;
}

double peres_estimate(const EstimatorInputs& in) {
  if (in.n < 1 || in.nu.size() != in.n) {
    throw Error(ErrorKind::BadDomain, "need n >= 1 frequencies");
  }
  if (!(in.epsilon > 0.0)) throw Error(ErrorKind::BadDomain, "epsilon must be positive");
  for (double v : in.nu) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::BadDomain, "frequencies must be positive");
  }
  const double nn = static_cast<double>(in.n);
  const double mean = std::accumulate(in.nu.begin(), in.nu.end(), 0.0) / nn;
  const double log_r = 0.5 * std::log(nn * in.epsilon) - std::log(2.0 * kPi);
  const double log_sigma = 0.5 * (nn - 1.0) * std::log(kPi) + (nn - 1.0) * log_r -
                           std::lgamma(0.5 * (nn + 1.0));
  return saturating_exp(-0.5 * std::log(nn) - std::log(mean) - log_sigma);
}

double bhattacharyya_estimate(const EstimatorInputs& in) {
  if (in.n < 2 || in.nu.size() != in.n) throw Error(ErrorKind::BadDomain, "need n >= 2 frequencies");
  if (!(in.epsilon > 0.0)) throw Error(ErrorKind::BadDomain, "epsilon must be positive");
  for (double v : in.nu) {
    if (!std::isfinite(v)) throw Error(ErrorKind::BadDomain, "frequencies must be finite");
  }
  const double nn = static_cast<double>(in.n);
  double ss = 0.0;
  for (std::size_t m = 1; m < in.n; ++m) ss += (in.nu[m] - in.nu[0]) * (in.nu[m] - in.nu[0]);
  const double nu_m1 = std::sqrt(ss) / std::sqrt(nn - 1.0);
  if (!(nu_m1 > 0.0)) throw Error(ErrorKind::DegenerateSpectrum, "all frequencies coincide");
  const double log_val = -0.5 * std::log(nn - 1.0) - std::log(nu_m1) + std::lgamma(0.5 * nn) +
                         0.5 * (nn - 2.0) * std::log(8.0 * kPi / (in.epsilon * (nn - 1.0)));
  return saturating_exp(log_val);
}

}  // namespace qrec
