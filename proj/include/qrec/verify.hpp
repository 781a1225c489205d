#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrec/io.hpp"

namespace qrec::verify {

/// Outcome of one property sweep. `skipped` instances are those the sweep
/// could not decide within its budget; they are counted, never dropped.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  double worst = 0.0;  // suite-specific worst-case statistic
  Json detail = Json::object();
};

Json to_json(const SuiteResult& r);

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Equal-superposition qubit, E = (0, 1), threshold 0.999.
SuiteResult qubit_example();

struct BracketOptions {
  std::size_t instances = 200;
  std::size_t max_samples = 1'000'000;
};
/// Seeded random systems, n in {2..5}. Checks the energy bracket, the
/// submersion inequality on every scanned sample, and the trace-norm form of
/// the Fuchs-van de Graaf consequence at each measured recurrence.
SuiteResult bracket_ensemble(std::uint64_t seed, const BracketOptions& opts = {});

/// n = 2 random systems, fidelity level 0.9, random step.
SuiteResult stroboscopic_ensemble(std::uint64_t seed, std::size_t instances = 50,
                                  double epsilon = 0.9, std::size_t cap = 100'000);

SuiteResult fvg_pairs(std::uint64_t seed, std::size_t pairs = 500);

/// n = 6, N = 3 random systems: time invariance of the truncation error and
/// the energy-mode corollary ceiling at the measured recurrence of sigma_tilde.
SuiteResult truncation_suite(std::uint64_t seed, std::size_t systems = 20, std::size_t times = 50);

/// Closed-form sphere and tube volumes.
SuiteResult geometry_closed_forms();

/// Random cycle graphs, discretized circles and ultrametrics with random
/// permutation isometries.
SuiteResult metric_recurrence_suite(std::uint64_t seed, std::size_t spaces = 100);

/// n = 1 closed form of the dimension-only bound and agreement of the two
/// sin-power integral routes.
SuiteResult special_functions();

/// find_recurrence under H -> H - lambda I gives the same grid indices.
SuiteResult lambda_invariance(std::uint64_t seed, std::size_t shifts = 10);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace qrec::verify
