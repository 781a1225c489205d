#pragma once

#include "qrec/states.hpp"

namespace qrec {

namespace tol {
inline constexpr double kFidelityClip = 1e-12;
inline constexpr double kFvgSlack = 1e-9;
// Below this 1 - F the Bures distance is taken from a matrix difference.
inline constexpr double kBuresDirect = 1e-6;
}  // namespace tol

/// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(2 - 2F), in [0, sqrt(2)].
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double bures_from_fidelity(double f);

/// Sum of |eigenvalues| of rho - sigma, in [0, 2].
double trace_distance_norm(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_norm_hermitian(const Matrix& a);

/// Frobenius norm.
double hs_norm(const Matrix& a);

struct EnergyStats {
  double mean = 0.0;
  double uncertainty = 0.0;
};
EnergyStats energy_stats(const Hamiltonian& h, const DensityMatrix& rho);

struct FvgCheck {
  bool lower_ok = false;
  bool upper_ok = false;
  double one_minus_f = 0.0;
  double half_trace = 0.0;
  double sqrt_one_minus_f2 = 0.0;
};
/// 1 - F <= ||rho - sigma||_1 / 2 <= sqrt(1 - F^2), each with 1e-9 slack.
FvgCheck fvg_check(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Fidelity against a fixed reference, with sqrt(reference) computed once.
/// The scanners evaluate F(rho0, rho(t)) millions of times through this.
class FidelityReference {
 public:
  explicit FidelityReference(const DensityMatrix& reference);
  double operator()(const Matrix& sigma) const;
  /// sqrt(2 - 2F) away from F = 1; close to it, min over unitaries V of
  /// ||sqrt(ref) - sqrt(sigma) V||_HS, which avoids the cancellation.
  double bures(const Matrix& sigma, double f) const;
  const Matrix& sqrt_reference() const noexcept { return sqrt_ref_; }

 private:
  Matrix sqrt_ref_;
  mutable Matrix work_;
};

struct DistanceSample {
  double t = 0.0;
  double fidelity = 1.0;
  double bures = 0.0;
  double trace_dist = 0.0;
  double hs_dist = 0.0;
};

DistanceSample distance_sample(double t, const DensityMatrix& reference, const DensityMatrix& rho);

}  // namespace qrec
