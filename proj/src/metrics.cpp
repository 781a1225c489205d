#include "qrec/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace qrec {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "states have different dimensions",
                {{"lhs_dim", static_cast<double>(a.dim())}, {"rhs_dim", static_cast<double>(b.dim())}});
  }
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver failed");
  RVector root = es.eigenvalues();
  for (Eigen::Index i = 0; i < root.size(); ++i) {
    root(i) = root(i) > tol::kFidelityClip ? std::sqrt(root(i)) : 0.0;
  }
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

double sum_sqrt_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver failed");
  double f = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > tol::kFidelityClip) f += std::sqrt(l);
  }
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace

FidelityReference::FidelityReference(const DensityMatrix& reference)
    : sqrt_ref_(psd_sqrt(reference.matrix())) {}

double FidelityReference::operator()(const Matrix& sigma) const {
  work_.noalias() = sqrt_ref_ * sigma * sqrt_ref_;
  return sum_sqrt_eigen(work_);
}

double FidelityReference::bures(const Matrix& sigma, double f) const {
  if (1.0 - f >= tol::kBuresDirect) return bures_from_fidelity(f);
  const Matrix sqrt_sigma = psd_sqrt(sigma);
  // Optimal V from the SVD of sqrt(ref) sqrt(sigma) = Q S P^dagger: V = P Q^dagger.
  Eigen::JacobiSVD<Matrix> svd(sqrt_ref_ * sqrt_sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix v = svd.matrixV() * svd.matrixU().adjoint();
  return (sqrt_ref_ - sqrt_sigma * v).norm();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return FidelityReference(rho)(sigma.matrix());
}

double bures_from_fidelity(double f) { return std::sqrt(std::max(0.0, 2.0 - 2.0 * f)); }

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const FidelityReference ref(rho);
  return ref.bures(sigma.matrix(), ref(sigma.matrix()));
}

double trace_norm_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver failed");
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance_norm(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return trace_norm_hermitian(rho.matrix() - sigma.matrix());
}

double hs_norm(const Matrix& a) { return a.norm(); }

EnergyStats energy_stats(const Hamiltonian& h, const DensityMatrix& rho) {
  if (h.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and state dimensions differ");
  double mean = 0.0;
  for (std::size_t k = 0; k < h.dim(); ++k) mean += h.energy(k) * rho.population(k);
  // Central second moment avoids cancellation between <H^2> and <H>^2.
  double var = 0.0;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const double d = h.energy(k) - mean;
    var += d * d * rho.population(k);
  }
  return {mean, std::sqrt(std::max(0.0, var))};
}

FvgCheck fvg_check(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = fidelity(rho, sigma);
  FvgCheck c;
  c.one_minus_f = 1.0 - f;
  c.half_trace = 0.5 * trace_distance_norm(rho, sigma);
  c.sqrt_one_minus_f2 = std::sqrt(std::max(0.0, 1.0 - f * f));
  c.lower_ok = c.one_minus_f <= c.half_trace + tol::kFvgSlack;
  c.upper_ok = c.half_trace <= c.sqrt_one_minus_f2 + tol::kFvgSlack;
  return c;
}

DistanceSample distance_sample(double t, const DensityMatrix& reference, const DensityMatrix& rho) {
  DistanceSample s;
  s.t = t;
  const FidelityReference ref(reference);
  s.fidelity = ref(rho.matrix());
  s.bures = ref.bures(rho.matrix(), s.fidelity);
  s.trace_dist = trace_distance_norm(reference, rho);
  s.hs_dist = hs_norm(reference.matrix() - rho.matrix());
  return s;
}

}  // namespace qrec
