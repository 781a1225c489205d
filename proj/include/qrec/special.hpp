#pragma once

#include <functional>

namespace qrec {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b]. Bisects the
/// interval with the largest error estimate until the total estimate is
/// below max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals = 2000);

/// ln of the integral of sin^m over [0, x], x in [0, pi]. Returns -inf for x == 0.
/// Evaluated on the integrand scaled by its maximum, so it stays finite
/// for exponents in the thousands.
double log_sin_power_integral(unsigned m, double x);

/// Integral of sin^m(s) over [0, x] for x in [0, pi].
double sin_power_integral(unsigned m, double x);

/// Same integral from the reduction formula
///   I_m = -sin^(m-1)(x) cos(x) / m + (m-1)/m * I_(m-2),
/// started from I_0 = x and I_1 = 1 - cos(x). Absolutely (not relatively)
/// stable; kept as an independent cross-check of the quadrature route.
double sin_power_integral_reduction(unsigned m, double x);

/// ln Gamma(a) - ln Gamma(b) for a, b > 0.
double log_gamma_ratio(double a, double b);

}  // namespace qrec
