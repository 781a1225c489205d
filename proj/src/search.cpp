#include "qrec/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qrec/evolution.hpp"
#include "qrec/parallel.hpp"
#include "qrec/torus.hpp"

namespace qrec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kFirstBlock = 256;
constexpr std::size_t kMaxBlock = 1 << 16;

// Torus over the populated levels, with matching energies.
struct SupportTorus {
  std::optional<FlatTorus> torus;
  std::vector<double> energies;
  double hbar = 1.0;
  double lambda = 0.0;

  double distance_at(double t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) {
      const double a = torus->radii()[k] * wrap_angle(-(energies[k] - lambda) * t / hbar);
      s += a * a;
    }
    return std::sqrt(s);
  }
};

SupportTorus support_torus(const Hamiltonian& h, const DensityMatrix& rho0, double lambda) {
  SupportTorus st;
  st.hbar = h.hbar();
  st.lambda = lambda;
  std::vector<double> radii;
  for (std::size_t k = 0; k < rho0.dim(); ++k) {
    const double p = rho0.population(k);
    if (p < tol::kZeroPopulation) continue;
    radii.push_back(std::sqrt(p));
    st.energies.push_back(h.energy(k));
  }
  if (!radii.empty()) st.torus.emplace(std::move(radii));
  return st;
}

void check_grid(const Hamiltonian& h, const Grid& grid, bool allow_coarse) {
  if (grid.steps == 0) throw Error(ErrorKind::BadParameter, "grid needs at least one step");
  if (!(grid.dt > 0.0) || !std::isfinite(grid.dt) || !std::isfinite(grid.t0)) {
    throw Error(ErrorKind::BadParameter, "grid spacing must be positive and finite");
  }
  const double limit = default_dt(h);
  if (!allow_coarse && grid.dt > limit * (1.0 + 1e-9)) {
    throw Error(ErrorKind::GridTooCoarse, "dt exceeds pi hbar / (4 max gap)",
                {{"dt", grid.dt}, {"max_dt", limit}});
  }
}

}  // namespace

double default_dt(const Hamiltonian& h) {
  const double gap = h.max_gap();
  if (!(gap > 0.0)) return 1.0;
  return kPi * h.hbar() / (4.0 * gap);
}

Grid grid_for_horizon(double t0, double dt, double horizon, std::size_t max_samples) {
  if (!(dt > 0.0)) throw Error(ErrorKind::BadParameter, "dt must be positive");
  if (!(horizon >= 0.0)) throw Error(ErrorKind::BadParameter, "horizon must be non-negative");
  const double n = std::floor(horizon / dt) + 1.0;
  const double capped = std::min(n, static_cast<double>(max_samples));
  return {t0, dt, static_cast<std::size_t>(std::max(1.0, capped))};
}

Grid auto_grid(const Hamiltonian& h, const std::optional<BoundReport>& bounds,
               std::optional<double> dt, std::size_t max_samples) {
  const double step = dt.value_or(default_dt(h));
  const double horizon = bounds && bounds->preconditions.thm2_applies && std::isfinite(bounds->upper_thm2)
                             ? bounds->upper_thm2 + step
                             : std::numeric_limits<double>::infinity();
  if (std::isinf(horizon)) return {0.0, step, max_samples};
  return grid_for_horizon(0.0, step, horizon, max_samples);
}

RecurrenceResult find_recurrence(const Hamiltonian& h, const DensityMatrix& rho0, double threshold,
                                 const Grid& grid, const SearchOptions& opts,
                                 const std::optional<BoundReport>& bounds) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorKind::BadDomain, "threshold must lie in (0, 1)", {{"threshold", threshold}});
  }
  check_grid(h, grid, opts.allow_coarse);
  const auto kernel = make_kernel(h, rho0);
  const FidelityReference fid(rho0);

  RecurrenceResult res;
  res.threshold = threshold;
  res.grid = grid;
  res.lipschitz_bound = 2.0 * grid.dt * kernel.max_frequency();
  res.lambda = opts.lambda.value_or(energy_stats(h, rho0).mean);

  SupportTorus st;
  if (opts.track_torus) {
    st = support_torus(h, rho0, res.lambda);
    res.torus_defined = st.torus.has_value();
  }
  const bool track_torus = opts.track_torus && res.torus_defined;

  if (kernel.stationary()) {
    res.stationary = true;
    res.samples_scanned = 1;
    if (opts.record_samples) {
      res.samples.push_back(distance_sample(grid.t0, rho0, rho0));
      if (opts.track_torus) {
        res.torus_dist.push_back(track_torus ? std::optional<double>(st.distance_at(grid.t0)) : std::nullopt);
      }
    }
    return res;
  }

  const std::size_t workers = opts.workers ? opts.workers : default_workers();
  std::vector<double> f_block;
  std::vector<double> torus_block;
  std::vector<double> bures_block;
  double prev_f = std::numeric_limits<double>::quiet_NaN();
  std::size_t block = kFirstBlock;
  bool done = false;

  for (std::size_t start = 0; start < grid.steps && !done; start += block, block = std::min(block * 2, kMaxBlock)) {
    const std::size_t count = std::min(block, grid.steps - start);
    f_block.assign(count, 0.0);
    if (track_torus) torus_block.assign(count, 0.0);
    bures_block.assign(count, 0.0);
    parallel_for(count, workers, [&](std::size_t b, std::size_t e) {
      const FidelityReference local(fid);
      Matrix rho_t;
      for (std::size_t i = b; i < e; ++i) {
        const double t = grid.time(start + i);
        evolve_into(kernel, t, rho_t);
        f_block[i] = local(rho_t);
        bures_block[i] = local.bures(rho_t, f_block[i]);
        if (track_torus) torus_block[i] = st.distance_at(t);
      }
    });

    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = start + i;
      const double f = f_block[i];
      const double t = grid.time(j);
      ++res.samples_scanned;
      if (!std::isnan(prev_f)) res.max_fidelity_step = std::max(res.max_fidelity_step, std::abs(f - prev_f));
      prev_f = f;
      if (track_torus) {
        const double excess = bures_block[i] - torus_block[i];
        res.max_submersion_excess = std::max(res.max_submersion_excess, excess);
        ++res.submersion_checked;
        if (excess > 1e-9) ++res.submersion_violations;
      }
      if (opts.record_samples) {
        Matrix rho_t;
        evolve_into(kernel, t, rho_t);
        const Matrix diff = rho0.matrix() - rho_t;
        res.samples.push_back({t, f, bures_block[i], trace_norm_hermitian(diff), hs_norm(diff)});
        if (opts.track_torus) {
          res.torus_dist.push_back(track_torus ? std::optional<double>(torus_block[i]) : std::nullopt);
        }
      }
      if (!res.t_departure) {
        if (f < threshold) {
          res.t_departure = t;
          res.departure_index = j;
        }
      } else if (f >= threshold) {
        res.t_rec = t;
        res.rec_index = j;
        res.fidelity_at_rec = f;
        res.bures_at_rec = bures_block[i];
        done = true;
        break;
      }
    }
  }

  if (res.t_rec && opts.refine) {
    double lo = *res.t_rec - grid.dt;
    double hi = *res.t_rec;
    Matrix rho_t;
    for (int it = 0; it < 10; ++it) {
      const double mid = 0.5 * (lo + hi);
      evolve_into(kernel, mid, rho_t);
      if (fid(rho_t) >= threshold) hi = mid;
      else lo = mid;
    }
    res.t_rec_refined = hi;
  }

  if (bounds && bounds->preconditions.thm2_applies) {
    auto& bc = res.bracket;
    bc.applicable = res.t_rec.has_value();
    bc.lower_mt = bounds->lower_mt;
    bc.upper_thm2 = bounds->upper_thm2;
    bc.slack = grid.dt;
    if (res.t_rec) {
      const double t_rel = *res.t_rec - grid.t0;
      bc.lower_ok = bounds->lower_mt - grid.dt <= t_rel;
      bc.upper_ok = t_rel <= bounds->upper_thm2 + grid.dt;
    }
  }
  return res;
}

StroboscopicResult stroboscopic_recurrence(const Hamiltonian& h, const DensityMatrix& rho0,
                                           double epsilon, double step, std::size_t jmax_cap) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorKind::BadParameter, "step must be positive");
  StroboscopicResult res;
  res.theory = thm1_bound(rho0.dim(), epsilon);
  const double ceil_theory = std::ceil(res.theory.jmax);
  const bool capped = !(ceil_theory <= static_cast<double>(jmax_cap));
  res.search_limit = capped ? jmax_cap : static_cast<std::size_t>(ceil_theory);

  const auto kernel = make_kernel(h, rho0);
  const FidelityReference fid(rho0);
  Matrix rho_t;
  for (std::size_t j = 1; j <= res.search_limit; ++j) {
    evolve_into(kernel, static_cast<double>(j) * step, rho_t);
    const double f = fid(rho_t);
    if (f >= epsilon) {
      res.j_found = j;
      res.fidelity_at_j = f;
      return res;
    }
  }
  res.cap_exceeded = capped;
  return res;
}

SurrogateResult torus_surrogate_scan(const Hamiltonian& h, const DensityMatrix& rho0, double r,
                                     const Grid& grid, std::optional<double> lambda,
                                     bool reduce_support) {
  if (!(r > 0.0)) throw Error(ErrorKind::BadParameter, "radius must be positive");
  check_grid(h, grid, true);
  // Raises ZeroPopulation for states that do not span the basis.
  if (!reduce_support) (void)torus_from_state(rho0, false);
  SurrogateResult res;
  res.lambda = lambda.value_or(energy_stats(h, rho0).mean);
  const SupportTorus st = support_torus(h, rho0, res.lambda);
  const auto kernel = make_kernel(h, rho0);
  const FidelityReference fid(rho0);
  Matrix rho_t;

  auto witness = [&](double t, double d) {
    evolve_into(kernel, t, rho_t);
    res.torus_at_surrogate = d;
    res.bures_at_surrogate = fid.bures(rho_t, fid(rho_t));
    res.witness_ok = res.bures_at_surrogate <= r + 1e-9;
  };

  for (std::size_t j = 0; j < grid.steps; ++j) {
    const double t = grid.time(j);
    const double d = st.distance_at(t);
    if (!res.departed) {
      if (d > r) {
        res.departed = true;
        res.t_departure = t;
      }
    } else if (d <= r) {
      res.t_surrogate = t;
      witness(t, d);
      return res;
    }
  }
  if (!res.departed) {
    res.t_surrogate = grid.t0;
    witness(grid.t0, st.distance_at(grid.t0));
  }
  return res;
}

}  // namespace qrec
