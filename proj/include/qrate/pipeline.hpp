#pragma once

#include <vector>

#include "qrate/ensemble.hpp"
#include "qrate/network.hpp"
#include "qrate/wait.hpp"

namespace qrate {

/// How evaluate_protocol propagates per-link outcome mixtures.
///  - kEnsemble: keep the weighted branch sets through the swap chain,
///    merging with k-means whenever the cap is exceeded.
///  - kMeanField: propagate only the mixture mean. All downstream consumers
///    are linear or take the mean anyway, so this is algebraically the same
///    result at a fraction of the cost; the optimizer uses it.
enum class EvalMode { kEnsemble, kMeanField };

struct EvalOptions {
  EvalMode mode = EvalMode::kEnsemble;
  int ensemble_cap = 100;
};

struct LinkEnsembleResult {
  WeightedEnsemble ensemble;
  double p_pur_used = 0.0;  ///< probability a purified pair went into the swap
};

/// Outcome mixture of one link at the moment its pair enters the swap,
/// including per-branch expected-duration dephasing.
LinkEnsembleResult link_ensemble(const NetworkParams& params,
                                 const SessionPlan& plan, double l0_km);

/// Swap all links into one end-to-end mixture and add the swap chain's gate
/// and readout errors to every set. Exceeding the cap triggers k-means
/// merging; total weight is preserved.
WeightedEnsemble chain_links(const std::vector<WeightedEnsemble>& links,
                             const NetworkParams& params,
                             const SessionPlan& plan);

struct EndNodeResult {
  BellDiagonal final_state;
  std::vector<double> pur_success;  ///< heralded probability per round
};

/// Chain end_purification rounds across sequential sessions, starting from
/// the session mixture mean. With no rounds this is just the mean.
EndNodeResult end_node_chain(const WeightedEnsemble& session_ensemble,
                             const NetworkParams& params,
                             const SessionPlan& plan, double t_session_s);

/// Full analytic evaluation of one plan.
RateReport evaluate_protocol(const NetworkParams& params,
                             const SessionPlan& plan,
                             const EvalOptions& options = {});

}  // namespace qrate
