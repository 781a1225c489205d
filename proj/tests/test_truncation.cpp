#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "qrec/truncation.hpp"

using namespace qrec;

namespace {

// Brute-force block weights from explicit index sets.
struct Blocks {
  double tail = 0.0, cross = 0.0, p = 0.0;
};

Blocks blocks(const DensityMatrix& rho, const std::vector<std::size_t>& rel) {
  Blocks b;
  const auto in = [&](std::size_t k) { return std::find(rel.begin(), rel.end(), k) != rel.end(); };
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    if (in(j)) b.p += rho.population(j);
    for (std::size_t k = 0; k < rho.dim(); ++k) {
      const double w = std::norm(rho(j, k));
      if (!in(j) && !in(k)) b.tail += w;
      else if (in(j) != in(k)) b.cross += w;
    }
  }
  return b;
}

}  // namespace

TEST_CASE("energy-order truncation weights") {
  const auto rho = random_density(6, 31);
  const auto t = truncate(rho, 3);
  CHECK(t.indices == std::vector<std::size_t>{0, 1, 2});
  const auto b = blocks(rho, t.indices);
  CHECK(t.delta_n == doctest::Approx(b.tail).epsilon(1e-14));
  CHECK(t.cross_weight == doctest::Approx(b.cross).epsilon(1e-14));
  CHECK(t.p_n == doctest::Approx(b.p).epsilon(1e-14));
  CHECK(t.complement_hs2 == doctest::Approx(b.tail + b.cross).epsilon(1e-14));
  CHECK(t.sigma_tilde.dim() == 3);
  CHECK(t.sigma_tilde.matrix().trace().real() == doctest::Approx(1.0));
  CHECK((rho.matrix() - t.sigma_n).squaredNorm() == doctest::Approx(t.complement_hs2).epsilon(1e-12));
  const auto full = truncate(rho, 6);
  CHECK(full.delta_n == 0.0);
  CHECK(full.p_n == doctest::Approx(1.0));
}

TEST_CASE("population-order truncation") {
  const std::vector<double> p{0.05, 0.5, 0.1, 0.35};
  const auto t = truncate(diagonal_state(p), 2, TruncationOrder::Population);
  std::vector<std::size_t> idx = t.indices;
  std::sort(idx.begin(), idx.end());
  CHECK(idx == std::vector<std::size_t>{1, 3});
  CHECK(t.p_n == doctest::Approx(0.85));
  CHECK(t.delta_n == doctest::Approx(0.05 * 0.05 + 0.1 * 0.1));
}

TEST_CASE("truncation errors") {
  const auto rho = random_density(4, 2);
  CHECK_KIND(truncate(rho, 0), ErrorKind::BadN);
  CHECK_KIND(truncate(rho, 5), ErrorKind::BadN);
  const std::vector<double> p{0.0, 1.0};
  CHECK_KIND(truncate(diagonal_state(p), 1), ErrorKind::ZeroProbability);
  CHECK_KIND(choose_n(rho, -1.0), ErrorKind::BadParameter);
}

TEST_CASE("choose_n") {
  const auto rho = random_density(6, 8);
  CHECK(choose_n(rho, 0.0) == 6);
  CHECK(choose_n(rho, 10.0) == 1);
  const double target = truncate(rho, 3).delta_n;
  const std::size_t n = choose_n(rho, target);
  CHECK(n <= 3);
  CHECK(truncate(rho, n).delta_n <= target);
  if (n > 1) CHECK(truncate(rho, n - 1).delta_n > target);
}

TEST_CASE("tail weight is time invariant") {
  const auto rho = random_density(6, 12);
  const auto h = model_hamiltonian(RandomSpectrumModel{6, 12});
  const std::vector<double> ts{0.0, 0.3, 17.0, 1e4, 3.3e6};
  const auto r = delta_time_invariance_check(h, rho, 3, ts);
  CHECK(r.tail_deviation < 1e-12);
  CHECK(r.complement_drift < 1e-12);
  CHECK(r.trace_drift < 1e-12);
  CHECK(r.literal_gap == doctest::Approx(truncate(rho, 3).cross_weight).epsilon(1e-10));
}

TEST_CASE("worked truncation examples") {
  const std::vector<double> p{0.5, 0.3, 0.2};
  const auto t = truncate(diagonal_state(p), 2);
  CHECK(t.delta_n == doctest::Approx(0.04).epsilon(1e-14));
  CHECK(t.p_n == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(t.sigma_tilde.population(0) == doctest::Approx(0.625));
  CHECK(t.sigma_tilde.population(1) == doctest::Approx(0.375));
  CHECK(choose_n(diagonal_state(p), 0.05) == 2);
  CHECK(choose_n(diagonal_state(p), 0.13) == 1);

  const double s = 1.0 / std::sqrt(6.0);
  const auto psi = pure_state(AmplitudeVector({2.0 * s, s, s}));
  const auto u = truncate(psi, 2);
  CHECK(u.p_n == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
  CHECK(u.delta_n == doctest::Approx(1.0 / 36.0).epsilon(1e-14));
}
