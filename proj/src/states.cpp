#include "qrec/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace qrec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::BadTrace: return "BadTrace";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::BadDomain: return "BadDomain";
    case ErrorKind::StationaryState: return "StationaryState";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::ZeroProbability: return "ZeroProbability";
    case ErrorKind::ZeroPopulation: return "ZeroPopulation";
    case ErrorKind::NotMetric: return "NotMetric";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotMeasurePreserving: return "NotMeasurePreserving";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Hamiltonian::Hamiltonian(std::vector<double> energies, double hbar)
    : energies_(std::move(energies)), hbar_(hbar) {
  if (energies_.empty()) {
    throw Error(ErrorKind::BadParameter, "Hamiltonian needs at least one level");
  }
  for (double e : energies_) {
    if (!std::isfinite(e)) throw Error(ErrorKind::BadParameter, "non-finite energy level");
  }
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
    throw Error(ErrorKind::BadParameter, "hbar must be positive and finite");
  }
}

double Hamiltonian::max_gap() const noexcept {
  auto [lo, hi] = std::minmax_element(energies_.begin(), energies_.end());
  return *hi - *lo;
}

Hamiltonian Hamiltonian::shifted(double shift) const {
  std::vector<double> e(energies_);
  for (double& x : e) x -= shift;
  return Hamiltonian(std::move(e), hbar_);
}

Hamiltonian Hamiltonian::restricted(std::span<const std::size_t> indices) const {
  std::vector<double> e;
  e.reserve(indices.size());
  for (std::size_t k : indices) {
    if (k >= energies_.size()) throw Error(ErrorKind::DimensionMismatch, "index out of range");
    e.push_back(energies_[k]);
  }
  return Hamiltonian(std::move(e), hbar_);
}

RVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver failed");
  return es.eigenvalues();
}

AmplitudeVector::AmplitudeVector(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw Error(ErrorKind::BadParameter, "empty amplitude vector");
  v_ = Eigen::Map<const CVector>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
  if (std::abs(v_.squaredNorm() - 1.0) > tol::kNormalization) {
    throw Error(ErrorKind::NotNormalized, "amplitudes are not normalized",
                {{"squared_norm", v_.squaredNorm()}});
  }
}

DensityMatrix validate_density(const Matrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix must be square and non-empty");
  }
  if (!entries.allFinite()) throw Error(ErrorKind::BadParameter, "non-finite matrix entry");

  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermitian) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian", {{"max_asymmetry", asym}});
  }
  Matrix m = 0.5 * (entries + entries.adjoint());

  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > tol::kTraceReject) {
    throw Error(ErrorKind::BadTrace, "trace differs from one", {{"trace", trace}});
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "eigensolver failed");
  RVector lambda = es.eigenvalues();
  const double min_eig = lambda.minCoeff();
  if (min_eig < -tol::kNegativeEigen) {
    throw Error(ErrorKind::NotPositive, "matrix has a negative eigenvalue",
                {{"min_eigenvalue", min_eig}});
  }
  if (min_eig < 0.0) {
    lambda = lambda.cwiseMax(0.0);
    m = es.eigenvectors() * lambda.asDiagonal() * es.eigenvectors().adjoint();
    m = 0.5 * (m + m.adjoint()).eval();
  }
  const double tr = m.trace().real();
  if (tr != 1.0) m /= tr;
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix pure_state(const AmplitudeVector& psi) {
  const CVector& v = psi.vector();
  Matrix m = v * v.adjoint();
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix diagonal_state(std::span<const double> populations) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(populations.size()),
                          static_cast<Eigen::Index>(populations.size()));
  for (std::size_t k = 0; k < populations.size(); ++k) {
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = populations[k];
  }
  return validate_density(m);
}

DensityMatrix gibbs_state(const Hamiltonian& h, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::BadParameter, "beta must be positive");
  }
  const auto& e = h.energies();
  const double e_min = *std::min_element(e.begin(), e.end());
  std::vector<double> w(e.size());
  // Shifted exponentials: the ground level has weight 1, so Z >= 1.
  for (std::size_t k = 0; k < e.size(); ++k) w[k] = std::exp(-beta * (e[k] - e_min));
  const double z = std::accumulate(w.begin(), w.end(), 0.0);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(e.size()), static_cast<Eigen::Index>(e.size()));
  for (std::size_t k = 0; k < e.size(); ++k) {
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = w[k] / z;
  }
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "dimension must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(n);
  return DensityMatrix::trusted(std::move(m));
}

namespace {

struct ModelBuilder {
  double hbar;

  std::vector<double> operator()(const QubitModel& q) const {
    if (!(q.gap > 0.0)) throw Error(ErrorKind::BadParameter, "qubit gap must be positive");
    return {0.0, q.gap};
  }
  std::vector<double> operator()(const OscillatorModel& o) const {
    if (o.n == 0 || !(o.omega > 0.0)) throw Error(ErrorKind::BadParameter, "bad oscillator");
    std::vector<double> e(o.n);
    for (std::size_t k = 0; k < o.n; ++k) e[k] = hbar * o.omega * (static_cast<double>(k) + 0.5);
    return e;
  }
  std::vector<double> operator()(const BoxModel& b) const {
    if (b.n == 0 || !(b.scale > 0.0)) throw Error(ErrorKind::BadParameter, "bad box model");
    std::vector<double> e(b.n);
    for (std::size_t k = 1; k <= b.n; ++k) e[k - 1] = b.scale * static_cast<double>(k * k);
    return e;
  }
  std::vector<double> operator()(const RandomSpectrumModel& r) const {
    if (r.n == 0) throw Error(ErrorKind::BadParameter, "random spectrum needs n >= 1");
    std::mt19937_64 rng(r.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> e(r.n);
    for (double& x : e) x = u(rng);
    std::sort(e.begin(), e.end());
    return e;
  }
};

}  // namespace

Hamiltonian model_hamiltonian(const ModelKind& kind, double hbar) {
  return Hamiltonian(std::visit(ModelBuilder{hbar}, kind), hbar);
}

DensityMatrix random_density(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "dimension must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  if (n == 1) return DensityMatrix::trusted(Matrix::Ones(1, 1));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(j, k) = Complex(re, im);
    }
  }
  Matrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  m /= m.trace().real();
  return validate_density(m);
}

SupportReduction reduce_to_support(const DensityMatrix& rho, double threshold) {
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < rho.dim(); ++k) {
    if (rho.population(k) >= threshold) kept.push_back(k);
  }
  if (kept.size() == rho.dim()) return {rho, std::move(kept), false};
  if (kept.empty()) throw Error(ErrorKind::ZeroProbability, "state has no support");
  const auto m = static_cast<Eigen::Index>(kept.size());
  Matrix sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      sub(a, b) = rho.matrix()(static_cast<Eigen::Index>(kept[a]), static_cast<Eigen::Index>(kept[b]));
    }
  }
  sub /= sub.trace().real();
  return {validate_density(sub), std::move(kept), true};
}

}  // namespace qrec
