#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qrec/error.hpp"

namespace qrec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kNegativeEigen = 1e-10;
inline constexpr double kTraceReject = 1e-6;
inline constexpr double kNormalization = 1e-12;
inline constexpr double kZeroPopulation = 1e-14;
}  // namespace tol

/// Discrete spectrum in its own eigenbasis. Energies are stored in the order
/// given; degenerate levels are allowed.
class Hamiltonian {
 public:
  explicit Hamiltonian(std::vector<double> energies, double hbar = 1.0);

  std::size_t dim() const noexcept { return energies_.size(); }
  const std::vector<double>& energies() const noexcept { return energies_; }
  double energy(std::size_t k) const { return energies_[k]; }
  double hbar() const noexcept { return hbar_; }

  /// Largest |E_k - E_j|.
  double max_gap() const noexcept;
  /// H - shift * I.
  Hamiltonian shifted(double shift) const;
  /// Levels restricted to the given basis indices, in that order.
  Hamiltonian restricted(std::span<const std::size_t> indices) const;

 private:
  std::vector<double> energies_;
  double hbar_;
};

/// Hermitian, positive semidefinite, unit-trace matrix in the energy basis.
/// Instances only come out of `validate_density` or from operations that
/// preserve the invariants by construction.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t j, std::size_t k) const { return m_(j, k); }
  double population(std::size_t k) const { return m_(k, k).real(); }
  RVector populations() const { return m_.diagonal().real(); }
  RVector eigenvalues() const;

  /// Wraps a matrix the caller already knows to be a valid state (e.g. the
  /// unitary image of a validated state). No checks are performed.
  static DensityMatrix trusted(Matrix m) { return DensityMatrix(std::move(m)); }

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

class AmplitudeVector {
 public:
  explicit AmplitudeVector(std::vector<Complex> amplitudes);
  std::size_t dim() const noexcept { return static_cast<std::size_t>(v_.size()); }
  const CVector& vector() const noexcept { return v_; }

 private:
  CVector v_;
};

/// Checks Hermiticity, positivity and trace. Eigenvalues in [-1e-10, 0) are
/// clipped and the result renormalized to unit trace.
DensityMatrix validate_density(const Matrix& entries);

DensityMatrix pure_state(const AmplitudeVector& psi);

/// Diagonal matrix with populations in the given order; must sum to one.
DensityMatrix diagonal_state(std::span<const double> populations);

DensityMatrix gibbs_state(const Hamiltonian& h, double beta);

DensityMatrix maximally_mixed(std::size_t n);

struct QubitModel { double gap; };
struct OscillatorModel { double omega; std::size_t n; };
struct BoxModel { double scale; std::size_t n; };
struct RandomSpectrumModel { std::size_t n; std::uint64_t seed; };
using ModelKind = std::variant<QubitModel, OscillatorModel, BoxModel, RandomSpectrumModel>;

Hamiltonian model_hamiltonian(const ModelKind& kind, double hbar = 1.0);

/// rho = G G^dagger / tr(G G^dagger) with G a seeded complex Ginibre matrix.
DensityMatrix random_density(std::size_t n, std::uint64_t seed);

/// Keeps only the basis states whose population is at least `threshold`.
/// Returns the reduced state and the kept indices.
struct SupportReduction {
  DensityMatrix state;
  std::vector<std::size_t> kept;
  bool reduced = false;
};
SupportReduction reduce_to_support(const DensityMatrix& rho,
                                   double threshold = tol::kZeroPopulation);

}  // namespace qrec
