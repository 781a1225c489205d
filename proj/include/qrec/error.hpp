#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace qrec {

enum class ErrorKind {
  NotHermitian,
  NotPositive,
  BadTrace,
  NotNormalized,
  BadParameter,
  Overflow,
  DimensionMismatch,
  EigenFailure,
  BadDomain,
  StationaryState,
  PreconditionViolated,
  DegenerateSpectrum,
  BadN,
  ZeroProbability,
  ZeroPopulation,
  NotMetric,
  NotIsometry,
  NotMeasurePreserving,
  GridTooCoarse,
  ParseError,
  IoError,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `details`
// carries numeric context (e.g. the largest admissible epsilon) so the CLI
// can emit it verbatim in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::map<std::string, double> details = {})
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::map<std::string, double>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::map<std::string, double> details_;
};

}  // namespace qrec
