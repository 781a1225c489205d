#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qrec/evolution.hpp"

using namespace qrec;

TEST_CASE("qubit coherence rotates") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto rho0 = pure_state(AmplitudeVector({s, s}));
  const Hamiltonian h({0.0, 1.0});
  const auto k = make_kernel(h, rho0);
  CHECK(k.max_frequency() == doctest::Approx(1.0));
  CHECK_FALSE(k.stationary());
  const double t = 0.7;
  const auto rho = evolve(k, t);
  // omega_01 = (E_1 - E_0) / hbar
  CHECK(std::abs(rho(0, 1) - 0.5 * std::polar(1.0, t)) < 1e-15);
  CHECK(std::abs(rho(1, 0) - 0.5 * std::polar(1.0, -t)) < 1e-15);
  CHECK(rho.population(0) == doctest::Approx(0.5));
  const auto back = evolve(k, 2.0 * std::numbers::pi);
  CHECK((back.matrix() - rho0.matrix()).norm() < 1e-14);
}

TEST_CASE("hbar scales frequencies") {
  const auto rho0 = random_density(3, 4);
  const Hamiltonian h1({0.0, 1.0, 3.0}, 1.0);
  const Hamiltonian h2({0.0, 2.0, 6.0}, 2.0);
  const auto a = evolve(make_kernel(h1, rho0), 1.3);
  const auto b = evolve(make_kernel(h2, rho0), 1.3);
  CHECK((a.matrix() - b.matrix()).norm() < 1e-14);
}

TEST_CASE("diagonal states are stationary") {
  const std::vector<double> p{0.25, 0.75};
  const auto k = make_kernel(Hamiltonian({0.0, 2.0}), diagonal_state(p));
  CHECK(k.stationary());
  // Degenerate levels keep coherences fixed.
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(make_kernel(Hamiltonian({1.0, 1.0}), pure_state(AmplitudeVector({s, s}))).stationary());
}

TEST_CASE("grid evaluates from absolute time") {
  const auto rho0 = random_density(4, 77);
  const Hamiltonian h({0.0, 0.31, 1.7, 2.9});
  const auto k = make_kernel(h, rho0);
  const auto g = evolve_grid(k, 1e6, 0.1, 5);
  REQUIRE(g.size() == 5);
  CHECK((g[4].matrix() - evolve(k, 1e6 + 0.4).matrix()).norm() < 1e-15);
  CHECK_KIND(evolve_grid(k, 0.0, 0.0, 3), ErrorKind::BadParameter);
  CHECK_KIND(evolve_grid(k, 0.0, 0.1, 0), ErrorKind::BadParameter);
  CHECK_KIND(make_kernel(Hamiltonian({0.0, 1.0}), rho0), ErrorKind::DimensionMismatch);
}

TEST_CASE("evolution is unitary") {
  const auto rho0 = random_density(5, 3);
  const auto k = make_kernel(model_hamiltonian(RandomSpectrumModel{5, 8}), rho0);
  const auto rho = evolve(k, 123.4);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
  const auto e0 = rho0.eigenvalues();
  const auto e1 = rho.eigenvalues();
  CHECK((e0 - e1).cwiseAbs().maxCoeff() < 1e-13);
}
