#include "qrec/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qrec/special.hpp"

namespace qrec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMetricTol = 1e-12;
}  // namespace

FlatTorus::FlatTorus(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw Error(ErrorKind::BadParameter, "torus needs at least one circle");
  for (double g : radii_) {
    if (!(g > 0.0) || !std::isfinite(g)) throw Error(ErrorKind::BadParameter, "torus radii must be positive");
  }
}

FlatTorus torus_from_state(const DensityMatrix& rho0, bool reduce_support) {
  std::vector<double> radii;
  for (std::size_t k = 0; k < rho0.dim(); ++k) {
    const double p = rho0.population(k);
    if (p < tol::kZeroPopulation) {
      if (reduce_support) continue;
      throw Error(ErrorKind::ZeroPopulation, "level has zero population",
                  {{"level", static_cast<double>(k)}, {"population", p}});
    }
    radii.push_back(std::sqrt(p));
  }
  return FlatTorus(std::move(radii));
}

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * kPi);  // in [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double torus_distance(const FlatTorus& torus, const std::vector<double>& theta) {
  if (theta.size() != torus.dim()) throw Error(ErrorKind::DimensionMismatch, "angle count differs from torus dimension");
  double s = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double a = torus.radii()[j] * wrap_angle(theta[j]);
    s += a * a;
  }
  return std::sqrt(s);
}

std::vector<double> torus_phase_at(const Hamiltonian& h, double lambda, double t) {
  std::vector<double> theta(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    theta[k] = wrap_angle(-(h.energy(k) - lambda) * t / h.hbar());
  }
  return theta;
}

double geodesic_speed(const FlatTorus& torus, const Hamiltonian& h, double lambda) {
  if (torus.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "torus and Hamiltonian dimensions differ");
  double s = 0.0;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const double v = torus.radii()[k] * (h.energy(k) - lambda) / h.hbar();
    s += v * v;
  }
  return std::sqrt(s);
}

double injectivity_radius(const FlatTorus& torus) {
  return kPi * *std::min_element(torus.radii().begin(), torus.radii().end());
}

double log_torus_volume(const FlatTorus& torus) {
  double s = static_cast<double>(torus.dim()) * std::log(2.0 * kPi);
  for (double g : torus.radii()) s += std::log(g);
  return s;
}

double torus_volume(const FlatTorus& torus) { return std::exp(log_torus_volume(torus)); }

double sphere_ball_volume(std::size_t n, double r) {
  if (n < 1) throw Error(ErrorKind::BadDomain, "sphere dimension must be at least 1");
  if (!(r >= 0.0 && r <= kPi)) throw Error(ErrorKind::BadDomain, "radius must lie in [0, pi]", {{"r", r}});
  if (r == 0.0) return 0.0;
  const double nn = static_cast<double>(n);
  const double log_area = std::log(2.0) + 0.5 * nn * std::log(kPi) - std::lgamma(0.5 * nn);
  return std::exp(log_area + log_sin_power_integral(static_cast<unsigned>(n - 1), r));
}

double log_tube_volume(std::size_t n, double theta, double length) {
  if (n < 2) throw Error(ErrorKind::BadDomain, "tube volume needs n >= 2");
  if (!(theta > 0.0) || !(length > 0.0)) throw Error(ErrorKind::BadDomain, "theta and length must be positive");
  const double m = static_cast<double>(n) - 1.0;
  return std::log(2.0) + 0.5 * m * std::log(kPi) - std::log(m) - std::lgamma(0.5 * m) +
         m * std::log(theta) + std::log(length);
}

double tube_volume(std::size_t n, double theta, double length) {
  return std::exp(log_tube_volume(n, theta, length));
}

FiniteMetricSpace::FiniteMetricSpace(RMatrix distances, std::vector<double> weights)
    : FiniteMetricSpace({}, std::move(distances), std::move(weights)) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> names, RMatrix distances,
                                     std::vector<double> weights)
    : labels_(std::move(names)), dist_(std::move(distances)), measure_(std::move(weights)) {
  const auto m = static_cast<std::size_t>(dist_.rows());
  if (m == 0 || dist_.cols() != dist_.rows() || measure_.size() != m) {
    throw Error(ErrorKind::NotMetric, "distance matrix and measure sizes disagree");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < m; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != m) {
    throw Error(ErrorKind::NotMetric, "label count differs from point count");
  }
  for (double w : measure_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::NotMetric, "measure weights must be positive");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (std::abs(dist(a, a)) > kMetricTol) throw Error(ErrorKind::NotMetric, "nonzero self-distance");
    for (std::size_t b = 0; b < m; ++b) {
      const double d = dist(a, b);
      if (!std::isfinite(d) || d < -kMetricTol) throw Error(ErrorKind::NotMetric, "negative or non-finite distance");
      if (std::abs(d - dist(b, a)) > kMetricTol) throw Error(ErrorKind::NotMetric, "distance is not symmetric");
      if (a != b && d <= kMetricTol) throw Error(ErrorKind::NotMetric, "distinct points at zero distance");
      for (std::size_t c = 0; c < m; ++c) {
        if (d > dist(a, c) + dist(c, b) + kMetricTol) {
          throw Error(ErrorKind::NotMetric, "triangle inequality fails",
                      {{"a", static_cast<double>(a)}, {"b", static_cast<double>(b)}, {"c", static_cast<double>(c)}});
        }
      }
    }
  }
}

double FiniteMetricSpace::total_measure() const noexcept {
  return std::accumulate(measure_.begin(), measure_.end(), 0.0);
}

MetricRecurrence metric_recurrence_oracle(const FiniteMetricSpace& space,
                                          const std::vector<std::size_t>& perm, std::size_t p,
                                          double r) {
  const std::size_t m = space.size();
  if (perm.size() != m) throw Error(ErrorKind::NotIsometry, "map size differs from space size");
  std::vector<bool> hit(m, false);
  for (std::size_t x : perm) {
    if (x >= m || hit[x]) throw Error(ErrorKind::NotIsometry, "map is not a permutation");
    hit[x] = true;
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (std::abs(space.measure()[perm[a]] - space.measure()[a]) > kMetricTol * std::max(1.0, space.measure()[a])) {
      throw Error(ErrorKind::NotMeasurePreserving, "map does not preserve the measure",
                  {{"point", static_cast<double>(a)}});
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (std::abs(space.dist(perm[a], perm[b]) - space.dist(a, b)) > kMetricTol) {
        throw Error(ErrorKind::NotIsometry, "map does not preserve distances",
                    {{"a", static_cast<double>(a)}, {"b", static_cast<double>(b)}});
      }
    }
  }
  if (p >= m) throw Error(ErrorKind::BadParameter, "point index out of range");
  if (!(r >= 0.0)) throw Error(ErrorKind::BadParameter, "radius must be non-negative");

  MetricRecurrence out;
  for (std::size_t x = 0; x < m; ++x) {
    if (space.dist(p, x) < 0.5 * r) out.ball_measure += space.measure()[x];
  }
  out.ball_empty = !(out.ball_measure > 0.0);
  out.bound = out.ball_empty ? std::numeric_limits<double>::infinity()
                             : space.total_measure() / out.ball_measure;

  std::size_t x = perm[p];
  out.orbit_length = 1;
  while (x != p) {
    x = perm[x];
    ++out.orbit_length;
  }
  // T^orbit(p) = p, so the scan always terminates by the orbit length.
  x = p;
  for (std::size_t k = 1; k <= out.orbit_length; ++k) {
    x = perm[x];
    if (space.dist(p, x) <= r) {
      out.n_r = k;
      break;
    }
  }
  // N_r can equal the bound exactly; the measure sums carry rounding.
  out.ok = static_cast<double>(out.n_r) <= out.bound * (1.0 + kMetricTol);
  return out;
}

}  // namespace qrec
