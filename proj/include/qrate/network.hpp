#pragma once

#include <vector>

#include "qrate/bell.hpp"

namespace qrate {

/// Physical and experimental scalars of the repeater network.
/// Lengths in km, times in seconds, speeds in km/s, errors as probabilities.
struct NetworkParams {
  double l_tot_km = 1000.0;   ///< end-to-end distance
  double l_att_km = 22.0;     ///< fiber attenuation length
  double eta0 = 0.4;          ///< fiber-independent efficiency
  double v_km_per_s = 2.0e5;  ///< signal speed in fiber
  double t_heg_s = 40e-6;     ///< heralded-entanglement trial period
  double t_swap_s = 210e-6;   ///< entanglement swap duration
  double t_pur_s = 220e-6;    ///< purification duration
  double t2_s = 0.5;          ///< spin coherence time (may be infinite)
  double eps_init = 1e-3;     ///< initialization error probability
  double eps_tqg = 1e-3;      ///< two-qubit-gate error probability
  double eps_meas = 1e-3;     ///< qubit measurement error probability

  void validate() const;  ///< throws std::invalid_argument naming the field
};

/// One protocol choice under evaluation.
struct SessionPlan {
  int num_links = 1;         ///< N
  int num_trials = 1;        ///< M, trials per session
  int link_purification = 0;  ///< P_L in {0,1}
  int end_purification = 0;   ///< P_E in {0,1,2}

  void validate() const;
};

/// Everything the evaluation of one plan produces.
struct RateReport {
  double l0_km = 0.0;
  double eta = 0.0;
  double p_heg = 0.0;
  double p_session = 0.0;
  double p_epr = 0.0;
  double t_session_s = 0.0;
  double t_epr_s = 0.0;
  double rate_hz = 0.0;      ///< raw EPR rate R = p_epr / t_epr
  double e_x = 0.0;
  double e_z = 0.0;
  double r_inf = 0.0;        ///< secret fraction, may be negative
  double skr_hz = 0.0;       ///< R * max(r_inf, 0)
  BellDiagonal bell;         ///< final pair state
  std::vector<double> pur_success;  ///< heralded end-node success per round
};

/// Probability that an emitted photon is detected after half the link fiber.
double detection_efficiency(const NetworkParams& params, double l0_km);

/// Success probability of one entanglement-generation trial: two detections,
/// half of which give the right early/late pattern.
double heg_success_probability(double eta);

/// Binomial pmf: exactly k of m trials succeed.
double link_success_pmf(double p_heg, int m_trials, int k);

/// Probability one link succeeds at least k times in m_trials trials.
double link_success_at_least(double p_heg, int m_trials, int k);

/// Probability all n_links links succeed at least k times.
double network_success_at_least(double p_heg, int m_trials, int k,
                                int n_links);

/// Probability all links reach k pairs but at least one stays below k+1.
double network_success_exactly(double p_heg, int m_trials, int k, int n_links);

/// Session wall time: trials, heralding round trip, optional purification
/// slot, and the swap.
double session_duration(const NetworkParams& params, const SessionPlan& plan,
                        double l0_km);

struct EprAttemptStats {
  double p_epr = 0.0;
  double t_epr_s = 0.0;
};

/// Success fraction and duration of one end-to-end EPR attempt when
/// end_purification rounds consume pairs from sequential sessions.
/// purification_success must hold one heralded probability per round.
EprAttemptStats epr_attempt_stats(double p_session,
                                  const std::vector<double>& purification_success,
                                  const SessionPlan& plan, double t_session_s,
                                  double t_pur_s);

double binary_entropy(double p);

/// BB84 secret fraction 1 - h(e_z) - h(e_x); may be negative.
double secret_fraction(double e_x, double e_z);

struct QubitCount {
  int inner = 0;
  int end = 0;
};

/// Qubits needed per node to keep trials multiplexed through the round trip.
QubitCount qubits_per_node(const NetworkParams& params, const SessionPlan& plan,
                           double l0_km);

/// Repeaterless secret-key capacity of the lossy channel times the repetition
/// rate. Returns +infinity at zero length.
double plob_bound(double l_tot_km, double l_att_km, double repetition_rate_hz);

}  // namespace qrate
