#include "qrec/evolution.hpp"

#include <cmath>

namespace qrec {

EvolutionKernel::EvolutionKernel(const Hamiltonian& h, DensityMatrix rho0)
    : rho0_(std::move(rho0)) {
  if (h.dim() != rho0_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and state dimensions differ",
                {{"hamiltonian_dim", static_cast<double>(h.dim())},
                 {"state_dim", static_cast<double>(rho0_.dim())}});
  }
  const auto n = static_cast<Eigen::Index>(h.dim());
  omega_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index kp = 0; kp < n; ++kp) {
      const double w = (h.energy(static_cast<std::size_t>(kp)) - h.energy(static_cast<std::size_t>(k))) / h.hbar();
      omega_(k, kp) = w;
      max_omega_ = std::max(max_omega_, std::abs(w));
      if (w != 0.0 && rho0_.matrix()(k, kp) != Complex(0.0, 0.0)) stationary_ = false;
    }
  }
}

EvolutionKernel make_kernel(const Hamiltonian& h, const DensityMatrix& rho0) {
  return EvolutionKernel(h, rho0);
}

void evolve_into(const EvolutionKernel& kernel, double t, Matrix& out) {
  const Matrix& r0 = kernel.rho0().matrix();
  const RMatrix& w = kernel.omega();
  const Eigen::Index n = r0.rows();
  out.resize(n, n);
  for (Eigen::Index kp = 0; kp < n; ++kp) {
    out(kp, kp) = r0(kp, kp);
    for (Eigen::Index k = 0; k < kp; ++k) {
      const Complex v = r0(k, kp) * std::polar(1.0, w(k, kp) * t);
      out(k, kp) = v;
      out(kp, k) = std::conj(v);
    }
  }
}

DensityMatrix evolve(const EvolutionKernel& kernel, double t) {
  Matrix out;
  evolve_into(kernel, t, out);
  return DensityMatrix::trusted(std::move(out));
}

std::vector<DensityMatrix> evolve_grid(const EvolutionKernel& kernel, double t0, double dt,
                                       std::size_t steps) {
  if (steps == 0) throw Error(ErrorKind::BadParameter, "grid needs at least one step");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::BadParameter, "dt must be positive");
  std::vector<DensityMatrix> out;
  out.reserve(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    out.push_back(evolve(kernel, t0 + static_cast<double>(j) * dt));
  }
  return out;
}

}  // namespace qrec
