#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrec/states.hpp"
#include "qrec/truncation.hpp"

namespace qrec {

/// Fidelity-threshold conventions. The dimension-only bound uses
/// F >= eps directly; the energy-uncertainty bound uses F >= 1 - eps^2 / 4.
double thm2_epsilon_from_threshold(double fidelity_threshold);
double threshold_from_thm2_epsilon(double epsilon);

struct Thm1Bound {
  double jmax = 0.0;      // +inf when saturated or when eps == 1
  double log_jmax = 0.0;  // +inf only for eps == 1
  bool infinite = false;  // zero-length integral (eps == 1)
  bool saturated = false; // finite log but jmax above DBL_MAX
};

/// Stroboscopic ceiling on j for t_rec = j t:
///   sqrt(pi) Gamma(n^2) / Gamma(n^2 + 1/2) / int_0^{sqrt(2-2eps)/2} sin^(2n^2-2).
Thm1Bound thm1_bound(std::size_t n, double epsilon);

/// ln c_n with c_n = (n-1) Gamma((n-1)/2) 4^(n-1) pi^((n+1)/2), n >= 2.
double log_c_n(std::size_t n);
/// Direct product form of c_n; overflows for large n.
double c_n_direct(std::size_t n);

struct BoundPreconditions {
  bool thm2_applies = false;
  bool support_reduced = false;
  bool thm1_infinite = false;
  double max_admissible_epsilon = 0.0;
};

struct BoundReport {
  std::size_t n = 0;           // dimension after support reduction
  std::size_t original_n = 0;
  std::vector<std::size_t> support;
  double hbar = 1.0;
  double threshold = 0.0;      // fidelity level both conventions refer to
  double epsilon = 0.0;        // energy-uncertainty convention
  double thm1_epsilon = 0.0;   // dimension-only convention (= threshold)
  double lambda = 0.0;         // zero-point shift, <H>
  double delta_e = 0.0;
  double lower_mt = 0.0;
  double upper_thm2 = 0.0;
  double upper_thm2_simplified = 0.0;
  double log_upper_thm2 = 0.0;
  double log_upper_thm2_simplified = 0.0;
  double log_c_n = 0.0;
  double log_population_product = 0.0;  // ln prod sqrt(p_k)
  Thm1Bound thm1;
  BoundPreconditions preconditions;
  std::vector<double> torus_radii;
};

/// Mandelstam-Tamm lower bound and energy-uncertainty upper bounds.
/// Throws StationaryState, PreconditionViolated (details carry the largest
/// admissible epsilon), DimensionMismatch, BadDomain.
BoundReport thm2_bounds(const Hamiltonian& h, const DensityMatrix& rho0, double epsilon,
                        bool reduce_support = true);

enum class CorollaryMode { Energy, Dimension };

struct CorollaryReport {
  CorollaryMode mode = CorollaryMode::Energy;
  std::size_t n_relevant = 0;
  double epsilon = 0.0;
  double delta_n = 0.0;
  double p_n = 0.0;
  double ceiling = 0.0;  // bound on ||rho(t_rec) - rho(0)||
  std::optional<BoundReport> energy;  // Energy mode
  Thm1Bound thm1;                     // Dimension mode
  std::optional<double> step;         // Dimension mode with a stroboscopic step t
  std::optional<double> upper_time;   // jmax * step
};

/// Corollary brackets for a truncated state. In energy mode `epsilon` uses
/// the energy-uncertainty convention and the bracket is evaluated for
/// sigma_tilde under the restricted spectrum; in dimension mode it is the
/// fidelity level of the dimension-only bound with N in place of n.
CorollaryReport corollary_bounds(const Hamiltonian& h, const TruncationResult& trunc, double epsilon,
                                 CorollaryMode mode, std::optional<double> step = std::nullopt);

double corollary_energy_ceiling(double delta_n, double p_n, double epsilon);
double corollary_dimension_ceiling(double delta_n, double p_n, double epsilon);

struct EstimatorInputs {
  std::size_t n = 0;
  std::vector<double> nu;
  double epsilon = 0.0;
};

/// Order-of-magnitude recurrence estimates for pure states; not bounds.
double peres_estimate(const EstimatorInputs& in);
double bhattacharyya_estimate(const EstimatorInputs& in);

inline constexpr const char* kEstimateLabel = "order-of-magnitude estimate, not a bound";

}  // namespace qrec
