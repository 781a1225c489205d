#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrec/bounds.hpp"
#include "qrec/search.hpp"
#include "qrec/torus.hpp"
#include "qrec/truncation.hpp"

namespace qrec {

using Json = nlohmann::ordered_json;

struct SystemSpec {
  Hamiltonian h;
  DensityMatrix rho0;
  std::string state_kind;  // matrix | pure | diagonal | gibbs
};

/// {"energies": [...], "hbar": 1.0, "state": {"matrix" | "pure" | "diagonal" | "gibbs": ...}}
/// Complex numbers are [re, im] pairs. Throws ParseError on schema problems.
SystemSpec parse_system(const Json& j);
SystemSpec load_system(const std::string& path);

struct MetricSpaceSpec {
  FiniteMetricSpace space;
  std::vector<std::size_t> perm;
};
/// {"points": [...], "dist": [[...]], "measure": [...], "permutation": [...]}
MetricSpaceSpec parse_metric_space(const Json& j);

Json read_json_file(const std::string& path);

/// Finite numbers as JSON numbers; non-finite as "inf", "-inf", "nan".
Json number(double x);

Json to_json(const Thm1Bound& b);
Json to_json(const BoundReport& r);
Json to_json(const CorollaryReport& r);
Json to_json(const TruncationResult& r, bool include_block = true);
Json to_json(const Grid& g);
Json to_json(const RecurrenceResult& r);
Json to_json(const StroboscopicResult& r);
Json to_json(const SurrogateResult& r);
Json to_json(const MetricRecurrence& r);
Json matrix_to_json(const Matrix& m);

/// Columns t, fidelity, bures, trace_dist, hs_dist, torus_dist.
void write_samples_csv(std::ostream& os, const RecurrenceResult& r);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace qrec
