#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrec/bounds.hpp"

using namespace qrec;
constexpr double kPi = std::numbers::pi;

TEST_CASE("threshold conventions") {
  CHECK(thm2_epsilon_from_threshold(0.999) == doctest::Approx(2.0 * std::sqrt(0.001)));
  CHECK(threshold_from_thm2_epsilon(thm2_epsilon_from_threshold(0.7)) == doctest::Approx(0.7));
  CHECK_KIND(thm2_epsilon_from_threshold(1.5), ErrorKind::BadDomain);
}

TEST_CASE("dimension-only bound") {
  for (double eps : {0.1, 0.5, 0.9}) {
    CHECK(thm1_bound(1, eps).jmax == doctest::Approx(4.0 / std::sqrt(2.0 - 2.0 * eps)).epsilon(1e-13));
  }
  // n = 2 against a Simpson integral and the product form of the Gamma ratio.
  const double eps = 0.6;
  const double upper = std::sqrt(2.0 - 2.0 * eps) / 2.0;
  const double integral = oracle::sin_power_simpson(6, upper, 100'000);
  const double want = std::sqrt(kPi) * std::exp(oracle::log_gamma_ratio_int_half(4, 4.5)) / integral;
  CHECK(thm1_bound(2, eps).jmax == doctest::Approx(want).epsilon(1e-10));
  CHECK(thm1_bound(3, 0.99).jmax > thm1_bound(3, 0.9).jmax);
  const auto one = thm1_bound(2, 1.0);
  CHECK(one.infinite);
  CHECK(std::isinf(one.jmax));
  const auto big = thm1_bound(40, 0.999);
  CHECK(big.saturated);
  CHECK(std::isfinite(big.log_jmax));
  CHECK_KIND(thm1_bound(2, 0.0), ErrorKind::BadDomain);
}

TEST_CASE("c_n") {
  CHECK(c_n_direct(2) == doctest::Approx(4.0 * kPi * kPi));
  CHECK(c_n_direct(3) == doctest::Approx(32.0 * kPi * kPi));
  for (std::size_t n = 2; n < 12; ++n) CHECK(std::exp(log_c_n(n)) == doctest::Approx(c_n_direct(n)).epsilon(1e-12));
  CHECK(std::isfinite(log_c_n(5000)));
}

TEST_CASE("energy bracket for the qubit") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto rho = pure_state(AmplitudeVector({s, s}));
  const double eps = 0.3;
  const auto r = thm2_bounds(Hamiltonian({0.0, 1.0}), rho, eps);
  CHECK(r.delta_e == doctest::Approx(0.5));
  CHECK(r.lower_mt == doctest::Approx(2.0 * eps));
  CHECK(r.upper_thm2 == doctest::Approx(4.0 * kPi * kPi / eps));
  CHECK(r.upper_thm2_simplified == doctest::Approx(r.upper_thm2));
  CHECK(r.preconditions.max_admissible_epsilon == doctest::Approx(kPi * s));
  CHECK(r.thm1_epsilon == doctest::Approx(1.0 - eps * eps / 4.0));
  // hbar enters linearly
  const auto r2 = thm2_bounds(Hamiltonian({0.0, 2.0}, 2.0), rho, eps);
  CHECK(r2.upper_thm2 == doctest::Approx(r.upper_thm2));
  CHECK(r2.lower_mt == doctest::Approx(r.lower_mt));
}

TEST_CASE("energy bracket preconditions") {
  const std::vector<double> p{1.0, 0.0};
  CHECK_KIND(thm2_bounds(Hamiltonian({0.0, 1.0}), diagonal_state(p), 0.1), ErrorKind::StationaryState);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_KIND(thm2_bounds(Hamiltonian({1.0, 1.0}), pure_state(AmplitudeVector({s, s})), 0.1),
             ErrorKind::StationaryState);
  const auto rho = random_density(3, 2);
  const double emax = kPi * std::sqrt(rho.populations().minCoeff());
  try {
    thm2_bounds(Hamiltonian({0.0, 1.0, 2.5}), rho, emax * 1.01);
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
    CHECK(e.details().at("max_admissible_epsilon") == doctest::Approx(emax));
  }
  const auto ok = thm2_bounds(Hamiltonian({0.0, 1.0, 2.5}), rho, emax * 0.5);
  CHECK(ok.lower_mt < ok.upper_thm2);
  CHECK(ok.upper_thm2 <= ok.upper_thm2_simplified * (1.0 + 1e-12));
}

TEST_CASE("support reduction enables the bracket") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto rho = pure_state(AmplitudeVector({s, 0.0, s}));
  const Hamiltonian h({0.0, 0.5, 1.0});
  const auto r = thm2_bounds(h, rho, 0.2);
  CHECK(r.preconditions.support_reduced);
  CHECK(r.n == 2);
  CHECK(r.support == std::vector<std::size_t>{0, 2});
  CHECK_KIND(thm2_bounds(h, rho, 0.2, false), ErrorKind::PreconditionViolated);
}

TEST_CASE("corollary ceilings") {
  CHECK(corollary_energy_ceiling(0.04, 0.9, 0.5) ==
        doctest::Approx(0.4 + std::sqrt(2.0) * 0.9 * 0.5 * std::sqrt(1.0 - 0.25 / 8.0)));
  CHECK(corollary_dimension_ceiling(0.04, 0.9, 0.5) == doctest::Approx(0.4 + 2.0 * 0.9 * 0.75));
  const auto rho = random_density(5, 9);
  const auto h = model_hamiltonian(RandomSpectrumModel{5, 9});
  const auto tr = truncate(rho, 3);
  const auto dim = corollary_bounds(h, tr, 0.8, CorollaryMode::Dimension, 0.5);
  REQUIRE(dim.upper_time);
  CHECK(*dim.upper_time == doctest::Approx(thm1_bound(3, 0.8).jmax * 0.5));
  const double eps = 0.3 * kPi * std::sqrt(tr.sigma_tilde.populations().minCoeff());
  const auto en = corollary_bounds(h, tr, eps, CorollaryMode::Energy);
  REQUIRE(en.energy);
  CHECK(en.energy->n == 3);
}

TEST_CASE("estimates are labelled and guarded") {
  EstimatorInputs in{3, {1.0, 1.0, 1.0}, 0.1};
  CHECK_KIND(bhattacharyya_estimate(in), ErrorKind::DegenerateSpectrum);
  in.nu = {1.0, 2.0, 3.5};
  CHECK(peres_estimate(in) > 0.0);
  CHECK(bhattacharyya_estimate(in) > 0.0);
  CHECK(std::string(kEstimateLabel).find("not a bound") != std::string::npos);
}
