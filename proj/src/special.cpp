#include "qrec/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "qrec/error.hpp"

namespace qrec {

namespace {

// Kronrod 15-point nodes/weights with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWk[7];
  double g = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXk[static_cast<std::size_t>(i)];
    const double s = f(c - dx) + f(c + dx);
    k += kWk[static_cast<std::size_t>(i)] * s;
    if (i % 2 == 1) g += kWg[static_cast<std::size_t>(i / 2)] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

constexpr double kPi = std::numbers::pi;

// ln of the integral of sin^m over [0, pi/2] (Wallis).
double log_half_wallis(unsigned m) {
  const double mm = static_cast<double>(m);
  return 0.5 * std::log(kPi) + log_gamma_ratio(0.5 * (mm + 1.0), 0.5 * mm + 1.0) - std::log(2.0);
}

// Integral over [0, x] for x <= pi/2, scaled by sin^m(x).
double log_sin_power_low(unsigned m, double x) {
  if (m == 0) return std::log(x);
  const double mm = static_cast<double>(m);
  const double log_sx = std::log(std::sin(x));
  auto scaled = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(mm * (std::log(std::sin(u)) - log_sx));
  };
  // The scaled integrand decays like exp(-m (x - u) cot x) away from x, so
  // everything below `cut` contributes less than 1e-300 relative.
  double a = 0.0;
  const double cot = std::cos(x) / std::sin(x);
  if (cot > 0.0) {
    const double width = 700.0 / (mm * cot);
    a = std::max(0.0, x - width);
  }
  const auto r = integrate_adaptive(scaled, a, x, 0.0, 1e-14, 4000);
  return mm * log_sx + std::log(r.value);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
  if (a == b) return {};
  std::priority_queue<Segment> heap;
  const Segment first = kronrod(f, a, b);
  double total = first.value;
  double err = first.error;
  heap.push(first);
  int count = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_intervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment l = kronrod(f, worst.a, mid);
    const Segment r = kronrod(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Re-sum to shed the drift of the incremental updates.
  double sum = 0.0, esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  return {sum, esum, count};
}

double log_sin_power_integral(unsigned m, double x) {
  if (!(x >= 0.0 && x <= kPi)) {
    throw Error(ErrorKind::BadDomain, "upper limit must lie in [0, pi]", {{"x", x}});
  }
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x <= 0.5 * kPi) return log_sin_power_low(m, x);
  // I(x) = 2 I(pi/2) - I(pi - x) by symmetry of sin about pi/2.
  const double log_half = log_half_wallis(m);
  const double rest = kPi - x;
  if (rest <= 0.0) return log_half + std::log(2.0);
  const double ratio = std::exp(log_sin_power_low(m, rest) - log_half);
  return log_half + std::log(2.0 - ratio);
}

double sin_power_integral(unsigned m, double x) {
  if (x == 0.0) return 0.0;
  return std::exp(log_sin_power_integral(m, x));
}

double sin_power_integral_reduction(unsigned m, double x) {
  if (!(x >= 0.0 && x <= kPi)) {
    throw Error(ErrorKind::BadDomain, "upper limit must lie in [0, pi]", {{"x", x}});
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  double even = x;
  double odd = 1.0 - c;
  if (m == 0) return even;
  if (m == 1) return odd;
  double prev = (m % 2 == 0) ? even : odd;
  double sp = (m % 2 == 0) ? s : s * s;  // sin^(k-1) for the first k
  for (unsigned k = (m % 2 == 0) ? 2u : 3u; k <= m; k += 2) {
    const double kk = static_cast<double>(k);
    prev = -sp * c / kk + (kk - 1.0) / kk * prev;
    sp *= s * s;
  }
  return prev;
}

double log_gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::BadDomain, "Gamma ratio needs positive finite arguments",
                {{"a", a}, {"b", b}});
  }
  if (a == b) return 0.0;
  if (std::min(a, b) < 20.0) return std::lgamma(a) - std::lgamma(b);
  // Stirling series, with the leading terms rearranged so the large
  // logarithms cancel analytically.
  auto corr = [](double z) {
    const double z2 = z * z;
    return 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2) -
           1.0 / (1680.0 * z * z2 * z2 * z2);
  };
  const double d = a - b;
  return (a - 0.5) * std::log1p(d / b) + d * std::log(b) - d + corr(a) - corr(b);
}

}  // namespace qrec
