#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrec/bounds.hpp"
#include "qrec/metrics.hpp"
#include "qrec/states.hpp"

namespace qrec {

struct Grid {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  double time(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
};

/// pi * hbar / (4 * max |E_k - E_j|); 1 for a fully degenerate spectrum.
double default_dt(const Hamiltonian& h);

/// Grid from t0 covering [t0, t0 + horizon] (inclusive), capped at max_samples.
Grid grid_for_horizon(double t0, double dt, double horizon, std::size_t max_samples);

inline constexpr std::size_t kDefaultMaxSamples = 10'000'000;

/// Horizon the bracket can be checked against: the energy-uncertainty upper
/// bound plus one step, capped at max_samples samples.
Grid auto_grid(const Hamiltonian& h, const std::optional<BoundReport>& bounds,
               std::optional<double> dt = std::nullopt,
               std::size_t max_samples = kDefaultMaxSamples);

struct SearchOptions {
  bool allow_coarse = false;
  bool refine = false;           // 10 bisection steps on the return crossing
  bool record_samples = false;   // keep full DistanceSamples up to the stop point
  bool track_torus = false;      // torus distance and submersion check per sample
  std::optional<double> lambda;  // torus zero-point shift, default <H>
  std::size_t workers = 0;       // 0: default_workers()
};

struct BracketCheck {
  bool applicable = false;
  bool lower_ok = false;
  bool upper_ok = false;
  double lower_mt = 0.0;
  double upper_thm2 = 0.0;
  double slack = 0.0;  // dt
};

struct RecurrenceResult {
  double threshold = 0.0;
  Grid grid;
  bool stationary = false;
  std::optional<double> t_departure;
  std::optional<double> t_rec;
  std::optional<std::size_t> departure_index;
  std::optional<std::size_t> rec_index;
  std::optional<double> t_rec_refined;
  double fidelity_at_rec = 0.0;
  double bures_at_rec = 0.0;
  std::size_t samples_scanned = 0;
  std::vector<DistanceSample> samples;
  std::vector<std::optional<double>> torus_dist;  // parallel to samples when tracked
  bool torus_defined = false;
  std::size_t submersion_checked = 0;
  std::size_t submersion_violations = 0;
  double max_submersion_excess = -1.0;  // max(bures - torus)
  double max_fidelity_step = 0.0;
  double lipschitz_bound = 0.0;         // 2 * dt * max |omega|
  double lambda = 0.0;
  BracketCheck bracket;
};

inline constexpr const char* kRecurrenceDefinition =
    "t_rec is the first grid time after the first departure below the threshold";

/// Scans F(rho0, rho(t)) on the grid. Departure is the first sample with
/// F < threshold; t_rec the first later sample with F >= threshold.
RecurrenceResult find_recurrence(const Hamiltonian& h, const DensityMatrix& rho0, double threshold,
                                 const Grid& grid, const SearchOptions& opts = {},
                                 const std::optional<BoundReport>& bounds = std::nullopt);

struct StroboscopicResult {
  std::optional<std::size_t> j_found;
  double fidelity_at_j = 0.0;
  Thm1Bound theory;
  std::size_t search_limit = 0;
  bool cap_exceeded = false;  // nothing found and the cap was below the theory bound
};

/// Smallest j in [1, min(cap, ceil(jmax))] with F(rho0, rho(j t)) >= epsilon.
StroboscopicResult stroboscopic_recurrence(const Hamiltonian& h, const DensityMatrix& rho0,
                                           double epsilon, double step, std::size_t jmax_cap);

struct SurrogateResult {
  bool departed = false;
  std::optional<double> t_departure;
  std::optional<double> t_surrogate;
  double torus_at_surrogate = 0.0;
  double bures_at_surrogate = 0.0;
  bool witness_ok = true;  // bures <= r wherever torus <= r was reported
  double lambda = 0.0;
};

/// First grid time after the torus distance exceeded r at which it is back
/// within r. Without a departure the start of the grid is returned. With
/// `reduce_support` the torus is built over the populated levels only.
SurrogateResult torus_surrogate_scan(const Hamiltonian& h, const DensityMatrix& rho0, double r,
                                     const Grid& grid, std::optional<double> lambda = std::nullopt,
                                     bool reduce_support = false);

}  // namespace qrec
