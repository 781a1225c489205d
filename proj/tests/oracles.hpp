#pragma once

// Test-side reference computations. Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

// Composite Simpson with `panels` panels (rounded up to even).
inline double simpson(const std::function<double(double)>& f, double a, double b, long panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0, even = 0.0;
  for (long i = 1; i < panels; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    (i % 2 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

inline double sin_power_simpson(unsigned m, double x, long panels = 1'000'000) {
  return simpson([m](double s) { return std::pow(std::sin(s), static_cast<double>(m)); }, 0.0, x, panels);
}

// ln Gamma(a) - ln Gamma(b) for a a positive integer and b a positive
// half-integer, from Gamma(k) = (k-1)! and Gamma(k + 1/2) = sqrt(pi) prod (j - 1/2).
inline double log_gamma_ratio_int_half(int a, double b) {
  double num = 0.0;
  for (int k = 2; k < a; ++k) num += std::log(static_cast<double>(k));
  double den = 0.5 * std::log(std::numbers::pi);
  for (double j = 0.5; j < b - 0.25; j += 1.0) den += std::log(j);
  return num - den;
}

// Fraction of uniform points on S^n (in R^(n+1)) within geodesic distance r
// of the north pole, times the total sphere volume.
inline double sphere_cap_monte_carlo(unsigned n, double r, double total, std::size_t samples,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n + 1);
  std::size_t hits = 0;
  const double c = std::cos(r);
  for (std::size_t s = 0; s < samples; ++s) {
    double norm2 = 0.0;
    for (auto& v : x) {
      v = g(rng);
      norm2 += v * v;
    }
    if (x[0] / std::sqrt(norm2) > c) ++hits;
  }
  return total * static_cast<double>(hits) / static_cast<double>(samples);
}

// |<psi|phi>| for pure states; fidelity of the rank-one projectors.
inline double pure_overlap(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return std::abs(s);
}

// Fidelity of commuting (diagonal) states: sum sqrt(p q).
inline double classical_fidelity(const std::vector<double>& p, const std::vector<double>& q) {
  double f = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) f += std::sqrt(p[i] * q[i]);
  return f;
}

// Recurrence count and ball bound for a permutation on an explicit distance
// table, by direct iteration. Open ball of radius r/2 around p.
struct MetricBrute {
  std::size_t n_r = 0;
  double bound = 0.0;
};

inline MetricBrute metric_brute(const std::vector<std::vector<double>>& d, const std::vector<double>& mu,
                                const std::vector<std::size_t>& perm, std::size_t p, double r) {
  MetricBrute out;
  std::size_t x = perm[p];
  for (std::size_t k = 1; k <= perm.size(); ++k, x = perm[x]) {
    if (d[p][x] <= r) {
      out.n_r = k;
      break;
    }
  }
  double total = 0.0, ball = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    total += mu[i];
    if (d[p][i] < 0.5 * r) ball += mu[i];
  }
  out.bound = total / ball;
  return out;
}

}  // namespace oracle
