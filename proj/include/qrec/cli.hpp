#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrec/truncation.hpp"

namespace qrec::cli {

enum class Command { Bounds, Search, Strobe, Truncate, Verify, Geometry };

const char* to_string(Command c);

struct RunConfig {
  Command command = Command::Bounds;
  std::string input;
  std::string output;  // empty: stdout
  std::string csv;     // search only
  double threshold = 0.99;
  std::optional<double> dt;       // nullopt: auto
  std::optional<double> horizon;  // nullopt: auto
  double t0 = 0.0;
  std::uint64_t seed = 42;
  std::optional<std::size_t> n_relevant;
  std::optional<double> delta_target;
  TruncationOrder order = TruncationOrder::Energy;
  bool reduce_support = true;
  bool refine = false;
  bool allow_coarse = false;
  bool surrogate = false;
  std::optional<double> step;
  std::size_t jmax_cap = 100'000;
  std::string suite = "all";
  // geometry
  std::string metric_space;
  std::size_t point = 0;
  std::optional<double> r;
  std::optional<std::size_t> sphere_n;
  double radius = 0.0;
  std::optional<std::size_t> tube_n;
  double theta = 0.0;
  double length = 0.0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitIo = 2;

/// Runs one command. Reports go to config.output (or `out` when empty);
/// failures produce an error JSON on the same channel.
int run(const RunConfig& config, std::ostream& out);
int run(const RunConfig& config);

/// Parses argv into a config. Returns nullopt and sets `exit_code` when the
/// arguments are invalid or help was requested.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code);

}  // namespace qrec::cli
