#pragma once

#include <vector>

#include "qrec/states.hpp"

namespace qrec {

enum class TruncationOrder {
  Energy,      // first N basis indices (ascending energy)
  Population,  // N most populated levels, ties broken by index
};

const char* to_string(TruncationOrder order);

/// N-relevant-state approximation of a state.
///
/// `delta_n` is the squared Hilbert-Schmidt norm of the block with both
/// indices outside the relevant set. The cross blocks (one index inside,
/// one outside) are not part of it; their weight is reported separately in
/// `cross_weight` so that `complement_hs2 = delta_n + cross_weight` is the
/// full ||rho - sigma_N||_HS^2.
struct TruncationResult {
  std::size_t n_relevant = 0;
  TruncationOrder order = TruncationOrder::Energy;
  std::vector<std::size_t> indices;  // relevant basis indices, in block order
  Matrix sigma_n;                    // n x n, zero outside the relevant block
  DensityMatrix sigma_tilde;         // N x N block divided by P_N
  double delta_n = 0.0;
  double p_n = 0.0;
  double cross_weight = 0.0;
  double complement_hs2 = 0.0;
};

TruncationResult truncate(const DensityMatrix& rho0, std::size_t n_relevant,
                          TruncationOrder order = TruncationOrder::Energy);

/// Smallest N (energy order) with delta_N <= delta_target.
std::size_t choose_n(const DensityMatrix& rho0, double delta_target);

struct DeltaInvarianceReport {
  /// max_t | ||tail block of rho(t)||^2 - delta_N |
  double tail_deviation = 0.0;
  /// max_t | ||rho(t) - sigma_N(t)||^2 - ||rho0 - sigma_N(0)||^2 |
  double complement_drift = 0.0;
  /// max_t | ||rho(t) - sigma_N(t)||^2 - delta_N |; equals the cross-block
  /// weight, which is nonzero whenever the state has coherences between
  /// relevant and discarded levels.
  double literal_gap = 0.0;
  /// max_t | tr sigma_N(t) - P_N |
  double trace_drift = 0.0;
};

DeltaInvarianceReport delta_time_invariance_check(const Hamiltonian& h, const DensityMatrix& rho0,
                                                  std::size_t n_relevant,
                                                  const std::vector<double>& times,
                                                  TruncationOrder order = TruncationOrder::Energy);

}  // namespace qrec
