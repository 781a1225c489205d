#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrec/special.hpp"

using namespace qrec;
constexpr double kPi = std::numbers::pi;

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 2.0, 1e-14, 1e-14);
  CHECK(r.value == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
  const auto peak = integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, 1e-12, 1e-12);
  CHECK(peak.value == doctest::Approx(2.0 * std::atan(100.0) * 100.0).epsilon(1e-11));
}

TEST_CASE("sin power integral against simpson") {
  for (unsigned m : {0u, 1u, 2u, 5u, 6u, 17u, 30u}) {
    for (double x : {0.05, 0.3, 1.0, kPi / 2.0, 2.5, kPi}) {
      const double want = oracle::sin_power_simpson(m, x, 200'000);
      CHECK_MESSAGE(std::abs(sin_power_integral(m, x) - want) < 1e-11, "m=" << m << " x=" << x);
      CHECK_MESSAGE(std::abs(sin_power_integral_reduction(m, x) - want) < 1e-11, "m=" << m << " x=" << x);
    }
  }
}

TEST_CASE("sin power closed forms") {
  CHECK(sin_power_integral(0, 1.3) == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(sin_power_integral(1, kPi) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sin_power_integral(2, kPi) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(std::isinf(log_sin_power_integral(4, 0.0)));
  CHECK_KIND(sin_power_integral(3, -0.1), ErrorKind::BadDomain);
  CHECK_KIND(sin_power_integral(3, 4.0), ErrorKind::BadDomain);
}

TEST_CASE("log sin power stays finite for huge exponents") {
  // Near 0 the integrand is s^m: int_0^x s^m ~ x^(m+1)/(m+1).
  const unsigned m = 5000;
  const double x = 1e-3;
  const double want = (m + 1) * std::log(x) - std::log(m + 1.0);
  const double got = log_sin_power_integral(m, x);
  CHECK(std::isfinite(got));
  CHECK(got == doctest::Approx(want).epsilon(1e-6));
  // Wallis: int_0^pi sin^m ~ sqrt(2 pi / m)
  CHECK(log_sin_power_integral(m, kPi) == doctest::Approx(0.5 * std::log(2.0 * kPi / m)).epsilon(1e-4));
}

TEST_CASE("gamma ratio") {
  CHECK(log_gamma_ratio(16.0, 16.5) == doctest::Approx(oracle::log_gamma_ratio_int_half(16, 16.5)).epsilon(1e-13));
  CHECK(log_gamma_ratio(400.0, 400.5) ==
        doctest::Approx(oracle::log_gamma_ratio_int_half(400, 400.5)).epsilon(1e-12));
  CHECK(log_gamma_ratio(3.0, 2.0) == doctest::Approx(std::log(2.0)));
  CHECK_KIND(log_gamma_ratio(-1.0, 2.0), ErrorKind::BadDomain);
}
