#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrec/states.hpp"

namespace qrec {

/// Product of circles with radii g_j and the flat metric diag(g_j^2).
class FlatTorus {
 public:
  explicit FlatTorus(std::vector<double> radii);
  std::size_t dim() const noexcept { return radii_.size(); }
  const std::vector<double>& radii() const noexcept { return radii_; }

 private:
  std::vector<double> radii_;
};

/// Radii sqrt(rho0[k][k]). Zero populations raise ZeroPopulation unless
/// `reduce_support` is set, in which case those levels are dropped.
FlatTorus torus_from_state(const DensityMatrix& rho0, bool reduce_support = false);

/// Maps an angle to (-pi, pi].
double wrap_angle(double theta);

double torus_distance(const FlatTorus& torus, const std::vector<double>& theta);

/// Phases -(E_k - lambda) t / hbar, wrapped.
std::vector<double> torus_phase_at(const Hamiltonian& h, double lambda, double t);

/// Speed of the phase geodesic, sqrt(sum_k g_k^2 ((E_k - lambda)/hbar)^2).
double geodesic_speed(const FlatTorus& torus, const Hamiltonian& h, double lambda);

double injectivity_radius(const FlatTorus& torus);
double log_torus_volume(const FlatTorus& torus);
double torus_volume(const FlatTorus& torus);

/// Volume of a geodesic ball of radius r in the unit sphere whose tangent
/// spheres are S^(n-1): (2 pi^(n/2) / Gamma(n/2)) int_0^r sin^(n-1).
double sphere_ball_volume(std::size_t n, double r);

/// Volume of a theta-tube around a geodesic segment of the given length in
/// a flat n-manifold. Admissibility of theta is the caller's business.
double log_tube_volume(std::size_t n, double theta, double length);
double tube_volume(std::size_t n, double theta, double length);

/// Finite metric measure space. Metric axioms are verified on construction.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, RMatrix dist, std::vector<double> measure);
  FiniteMetricSpace(RMatrix dist, std::vector<double> measure);

  std::size_t size() const noexcept { return measure_.size(); }
  const RMatrix& dist() const noexcept { return dist_; }
  double dist(std::size_t a, std::size_t b) const {
    return dist_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }
  const std::vector<double>& measure() const noexcept { return measure_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double total_measure() const noexcept;

 private:
  std::vector<std::string> labels_;
  RMatrix dist_;
  std::vector<double> measure_;
};

struct MetricRecurrence {
  std::size_t n_r = 0;       // smallest k >= 1 with d(p, T^k p) <= r
  double bound = 0.0;        // mu(M) / mu(B_{r/2}(p)), open ball
  double ball_measure = 0.0;
  bool ok = false;           // n_r <= bound
  bool ball_empty = false;   // bound is infinite; search capped at the orbit length
  std::size_t orbit_length = 0;
};

/// Brute-force recurrence of p under a permutation T. T must preserve both
/// the metric and the measure (NotIsometry / NotMeasurePreserving otherwise).
MetricRecurrence metric_recurrence_oracle(const FiniteMetricSpace& space,
                                          const std::vector<std::size_t>& perm, std::size_t p,
                                          double r);

}  // namespace qrec
