#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qrec/states.hpp"

using namespace qrec;

TEST_CASE("hamiltonian validation") {
  CHECK_KIND(Hamiltonian({}), ErrorKind::BadParameter);
  CHECK_KIND(Hamiltonian({0.0, NAN}), ErrorKind::BadParameter);
  CHECK_KIND(Hamiltonian({0.0, 1.0}, 0.0), ErrorKind::BadParameter);
  const Hamiltonian h({3.0, -1.0, 0.5}, 2.0);
  CHECK(h.dim() == 3);
  CHECK(h.max_gap() == doctest::Approx(4.0));
  const auto s = h.shifted(1.0);
  CHECK(s.energy(0) == doctest::Approx(2.0));
  CHECK(s.hbar() == 2.0);
  const std::vector<std::size_t> idx{0, 2};
  const auto r = h.restricted(idx);
  CHECK(r.dim() == 2);
  CHECK(r.energy(1) == 0.5);
}

TEST_CASE("density validation order") {
  Matrix m(2, 2);
  m << Complex(0.5, 0), Complex(0.1, 0), Complex(0.2, 0), Complex(0.5, 0);
  CHECK_KIND(validate_density(m), ErrorKind::NotHermitian);

  m << Complex(0.6, 0), Complex(0, 0), Complex(0, 0), Complex(0.6, 0);
  CHECK_KIND(validate_density(m), ErrorKind::BadTrace);

  m << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
  CHECK_KIND(validate_density(m), ErrorKind::NotPositive);

  // Slightly negative eigenvalue within tolerance is clipped.
  m << Complex(1.0 + 5e-11, 0), Complex(0, 0), Complex(0, 0), Complex(-5e-11, 0);
  const auto rho = validate_density(m);
  CHECK(rho.eigenvalues().minCoeff() >= 0.0);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-15));

  Matrix rect(2, 3);
  rect.setZero();
  CHECK_KIND(validate_density(rect), ErrorKind::DimensionMismatch);
}

TEST_CASE("builders") {
  CHECK_KIND(AmplitudeVector({Complex(1, 0), Complex(1, 0)}), ErrorKind::NotNormalized);
  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = pure_state(AmplitudeVector({s, Complex(0, s)}));
  CHECK(plus(0, 1).imag() == doctest::Approx(-0.5));
  CHECK(plus.population(0) == doctest::Approx(0.5));

  const std::vector<double> p{0.2, 0.3, 0.5};
  const auto d = diagonal_state(p);
  CHECK(d.population(2) == doctest::Approx(0.5));

  const auto mm = maximally_mixed(4);
  CHECK(mm.population(3) == doctest::Approx(0.25));

  const Hamiltonian h({0.0, 1.0, 2.0});
  CHECK_KIND(gibbs_state(h, 0.0), ErrorKind::BadParameter);
  const auto g = gibbs_state(h, 1.0);
  const double z = 1.0 + std::exp(-1.0) + std::exp(-2.0);
  CHECK(g.population(1) == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-14));
  // Large beta stays finite.
  const auto cold = gibbs_state(Hamiltonian({1000.0, 2000.0}), 10.0);
  CHECK(cold.population(0) == doctest::Approx(1.0));
}

TEST_CASE("models") {
  const auto osc = model_hamiltonian(OscillatorModel{2.0, 3}, 0.5);
  CHECK(osc.energy(0) == doctest::Approx(0.5));
  CHECK(osc.energy(2) == doctest::Approx(2.5));
  const auto box = model_hamiltonian(BoxModel{1.5, 3});
  CHECK(box.energy(0) == doctest::Approx(1.5));
  CHECK(box.energy(2) == doctest::Approx(13.5));
  const auto q = model_hamiltonian(QubitModel{0.7});
  CHECK(q.max_gap() == doctest::Approx(0.7));
  const auto a = model_hamiltonian(RandomSpectrumModel{5, 9});
  const auto b = model_hamiltonian(RandomSpectrumModel{5, 9});
  CHECK(a.energies() == b.energies());
  for (std::size_t k = 1; k < 5; ++k) CHECK(a.energy(k) >= a.energy(k - 1));
}

TEST_CASE("random density") {
  const auto rho = random_density(4, 123);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rho.eigenvalues().minCoeff() > 0.0);
  CHECK((rho.matrix() - rho.matrix().adjoint()).norm() < 1e-15);
  CHECK(random_density(4, 123).matrix() == rho.matrix());
  CHECK(random_density(1, 5).population(0) == 1.0);
}

TEST_CASE("support reduction") {
  const std::vector<double> p{0.5, 0.0, 0.5};
  const auto red = reduce_to_support(diagonal_state(p));
  CHECK(red.reduced);
  CHECK(red.kept == std::vector<std::size_t>{0, 2});
  CHECK(red.state.dim() == 2);
  const auto full = reduce_to_support(random_density(3, 1));
  CHECK_FALSE(full.reduced);
}
