#pragma once

#include <vector>

#include "qrec/states.hpp"

namespace qrec {

/// Bohr-frequency table for exact evolution in the energy basis:
/// rho(t)[k][k'] = rho0[k][k'] * exp(i * omega[k][k'] * t), with
/// omega[k][k'] = (E_k' - E_k) / hbar.
class EvolutionKernel {
 public:
  EvolutionKernel(const Hamiltonian& h, DensityMatrix rho0);

  std::size_t dim() const noexcept { return rho0_.dim(); }
  const RMatrix& omega() const noexcept { return omega_; }
  const DensityMatrix& rho0() const noexcept { return rho0_; }
  double max_frequency() const noexcept { return max_omega_; }

  /// True when every coherence with a nonzero Bohr frequency vanishes.
  bool stationary() const noexcept { return stationary_; }

 private:
  RMatrix omega_;
  DensityMatrix rho0_;
  double max_omega_ = 0.0;
  bool stationary_ = true;
};

EvolutionKernel make_kernel(const Hamiltonian& h, const DensityMatrix& rho0);

DensityMatrix evolve(const EvolutionKernel& kernel, double t);

/// Writes rho(t) into `out` (resized as needed); the allocation-free path
/// used by the scanners.
void evolve_into(const EvolutionKernel& kernel, double t, Matrix& out);

/// rho(t0 + j*dt) for j = 0..steps-1, each evaluated from absolute time.
std::vector<DensityMatrix> evolve_grid(const EvolutionKernel& kernel, double t0, double dt,
                                       std::size_t steps);

}  // namespace qrec
