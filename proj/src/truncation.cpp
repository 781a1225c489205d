#include "qrec/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrec/evolution.hpp"

namespace qrec {

const char* to_string(TruncationOrder order) {
  return order == TruncationOrder::Energy ? "energy" : "population";
}

namespace {

std::vector<std::size_t> relevant_indices(const DensityMatrix& rho, std::size_t n_relevant,
                                          TruncationOrder order) {
  std::vector<std::size_t> idx(rho.dim());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (order == TruncationOrder::Population) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return rho.population(a) > rho.population(b);
    });
  }
  idx.resize(n_relevant);
  return idx;
}

struct BlockWeights {
  double head = 0.0;
  double tail = 0.0;
  double cross = 0.0;
};

BlockWeights block_weights(const Matrix& m, const std::vector<bool>& inside) {
  BlockWeights w;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      const double a = std::norm(m(j, k));
      const bool in_j = inside[static_cast<std::size_t>(j)];
      const bool in_k = inside[static_cast<std::size_t>(k)];
      if (in_j && in_k) w.head += a;
      else if (!in_j && !in_k) w.tail += a;
      else w.cross += a;
    }
  }
  return w;
}

std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<bool> inside(n, false);
  for (std::size_t k : indices) inside[k] = true;
  return inside;
}

}  // namespace

TruncationResult truncate(const DensityMatrix& rho0, std::size_t n_relevant, TruncationOrder order) {
  const std::size_t n = rho0.dim();
  if (n_relevant < 1 || n_relevant > n) {
    throw Error(ErrorKind::BadN, "N must lie in [1, n]",
                {{"N", static_cast<double>(n_relevant)}, {"n", static_cast<double>(n)}});
  }
  auto indices = relevant_indices(rho0, n_relevant, order);
  const auto inside = membership(n, indices);
  const Matrix& r = rho0.matrix();

  const auto nn = static_cast<Eigen::Index>(n_relevant);
  Matrix block(nn, nn);
  Matrix embedded = Matrix::Zero(r.rows(), r.cols());
  double p = 0.0;
  for (Eigen::Index a = 0; a < nn; ++a) {
    const auto ja = static_cast<Eigen::Index>(indices[static_cast<std::size_t>(a)]);
    p += r(ja, ja).real();
    for (Eigen::Index b = 0; b < nn; ++b) {
      const auto jb = static_cast<Eigen::Index>(indices[static_cast<std::size_t>(b)]);
      block(a, b) = r(ja, jb);
      embedded(ja, jb) = r(ja, jb);
    }
  }
  if (!(p > tol::kZeroPopulation)) {
    throw Error(ErrorKind::ZeroProbability, "relevant levels carry no probability", {{"P_N", p}});
  }
  const auto w = block_weights(r, inside);

  Matrix normalized = block / p;
  DensityMatrix tilde = n_relevant == n && order == TruncationOrder::Energy
                            ? rho0
                            : validate_density(normalized);
  TruncationResult out{n_relevant, order, std::move(indices), std::move(embedded), std::move(tilde),
                       w.tail, p, w.cross, w.tail + w.cross};
  return out;
}

std::size_t choose_n(const DensityMatrix& rho0, double delta_target) {
  if (!(delta_target >= 0.0)) throw Error(ErrorKind::BadParameter, "delta target must be non-negative");
  const std::size_t n = rho0.dim();
  const Matrix& r = rho0.matrix();
  // Tail weight of the trailing block [N, n) x [N, n), built from the
  // bottom-right corner outwards.
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t start = n; start-- > 0;) {
    const auto s = static_cast<Eigen::Index>(start);
    double add = std::norm(r(s, s));
    for (Eigen::Index k = s + 1; k < static_cast<Eigen::Index>(n); ++k) {
      add += 2.0 * std::norm(r(s, k));
    }
    tail[start] = tail[start + 1] + add;
  }
  for (std::size_t big_n = 1; big_n <= n; ++big_n) {
    if (tail[big_n] <= delta_target) return big_n;
  }
  return n;
}

DeltaInvarianceReport delta_time_invariance_check(const Hamiltonian& h, const DensityMatrix& rho0,
                                                  std::size_t n_relevant,
                                                  const std::vector<double>& times,
                                                  TruncationOrder order) {
  const auto tr = truncate(rho0, n_relevant, order);
  const auto inside = membership(rho0.dim(), tr.indices);
  const auto kernel = make_kernel(h, rho0);
  DeltaInvarianceReport rep;
  Matrix rho_t;
  for (double t : times) {
    evolve_into(kernel, t, rho_t);
    const auto w = block_weights(rho_t, inside);
    // rho(t) - sigma_N(t) is rho(t) with the relevant block zeroed.
    const double complement = w.tail + w.cross;
    double trace = 0.0;
    for (std::size_t k : tr.indices) {
      trace += rho_t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
    }
    rep.tail_deviation = std::max(rep.tail_deviation, std::abs(w.tail - tr.delta_n));
    rep.complement_drift = std::max(rep.complement_drift, std::abs(complement - tr.complement_hs2));
    rep.literal_gap = std::max(rep.literal_gap, std::abs(complement - tr.delta_n));
    rep.trace_drift = std::max(rep.trace_drift, std::abs(trace - tr.p_n));
  }
  return rep;
}

}  // namespace qrec
