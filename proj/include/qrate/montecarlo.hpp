#pragma once

#include <cstdint>
#include <vector>

#include "qrate/network.hpp"

namespace qrate {

/// What the simulator propagates per pair.
///  - kProbabilities: Bell coefficient vectors with the exactly sampled wait
///    times; branch decisions are sampled from the current vectors.
///  - kTrajectories: a definite Bell label per pair with discretely sampled
///    error events.
enum class TrackMode { kProbabilities, kTrajectories };

struct SimConfig {
  std::uint64_t seed = 1;
  long n_sessions = 100000;  ///< simulation stops once this many sessions ran
  NetworkParams params;
  SessionPlan plan;
  TrackMode mode = TrackMode::kProbabilities;
};

struct SimReport {
  long sessions_run = 0;
  long cycles_run = 0;       ///< attempt cycles (one per EPR attempt)
  long epr_successes = 0;

  double p_session_hat = 0.0;
  double p_session_se = 0.0;
  double p_epr_hat = 0.0;
  double p_epr_se = 0.0;
  double e_x_hat = 0.0;
  double e_x_se = 0.0;
  double e_z_hat = 0.0;
  double e_z_se = 0.0;
  long error_samples = 0;    ///< pairs contributing to the e_x/e_z estimates

  double mean_wait_s = 0.0;  ///< mean per-link pair age entering the swap
  /// Empirical pmf of the per-link wait m (pooled over links); only filled
  /// when the plan runs without link purification.
  std::vector<double> wait_pmf;
};

/// Trial-by-trial simulation of complete EPR attempts; the stochastic oracle
/// for the analytic pipeline. Deterministic for a fixed config.
SimReport simulate_sessions(const SimConfig& config);

/// z-scores of a simulation against an analytic report.
struct Divergence {
  double z_p_session = 0.0;
  double z_p_epr = 0.0;
  double z_e_x = 0.0;
  double z_e_z = 0.0;
};

Divergence compare(const SimReport& sim, const RateReport& analytic);

/// Exact 16-dimensional simulation of the swap circuit (shared-node CNOT,
/// X and Z readouts, Pauli-frame fix) over a Bell-diagonal two-pair mixture.
/// Test oracle for entanglement_swap.
BellDiagonal circuit_oracle_swap(const BellDiagonal& left,
                                 const BellDiagonal& right);

struct PurifyOracleResult {
  double p_success = 0.0;
  BellDiagonal success_state;
  double p_fail = 0.0;
  BellDiagonal fail_state;
};

/// Exact 16-dimensional simulation of the purification circuit (single-qubit
/// rotations, bilateral CNOT, coincidence readout). Test oracle for the
/// error-free purification branches.
PurifyOracleResult circuit_oracle_purify(const BellDiagonal& pair1,
                                         const BellDiagonal& pair2);

}  // namespace qrate
