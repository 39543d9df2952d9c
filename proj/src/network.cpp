#include "qrate/network.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qrate {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

void NetworkParams::validate() const {
  require(l_tot_km > 0.0, "params: l_tot_km must be positive");
  require(l_att_km > 0.0, "params: l_att_km must be positive");
  require(is_probability(eta0), "params: eta0 must be in [0,1]");
  require(v_km_per_s > 0.0, "params: v_km_per_s must be positive");
  require(t_heg_s > 0.0, "params: t_heg_s must be positive");
  require(t_swap_s >= 0.0, "params: t_swap_s must be non-negative");
  require(t_pur_s >= 0.0, "params: t_pur_s must be non-negative");
  require(t2_s > 0.0, "params: t2_s must be positive");
  require(is_probability(eps_init), "params: eps_init must be in [0,1]");
  require(is_probability(eps_tqg), "params: eps_tqg must be in [0,1]");
  require(is_probability(eps_meas), "params: eps_meas must be in [0,1]");
}

void SessionPlan::validate() const {
  require(num_links >= 1, "plan: num_links must be >= 1");
  require(num_trials >= 1, "plan: num_trials must be >= 1");
  require(link_purification == 0 || link_purification == 1,
          "plan: link_purification must be 0 or 1");
  require(end_purification >= 0 && end_purification <= 2,
          "plan: end_purification must be 0, 1 or 2");
  if (link_purification == 1)
    require(num_trials >= 3,
            "plan: link purification needs at least 3 trials per session");
}

double detection_efficiency(const NetworkParams& params, double l0_km) {
  require(l0_km > 0.0, "detection_efficiency: l0_km must be positive");
  require(params.l_att_km > 0.0,
          "detection_efficiency: l_att_km must be positive");
  return params.eta0 * std::exp(-l0_km / (2.0 * params.l_att_km));
}

double heg_success_probability(double eta) {
  require(is_probability(eta), "heg_success_probability: eta not in [0,1]");
  return eta * eta / 2.0;
}

double link_success_pmf(double p_heg, int m_trials, int k) {
  require(is_probability(p_heg), "link_success_pmf: p_heg not in [0,1]");
  require(k >= 0 && k <= m_trials, "link_success_pmf: k out of range");
  if (p_heg == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p_heg == 1.0) return k == m_trials ? 1.0 : 0.0;
  const double log_term = log_binomial(m_trials, k) + k * std::log(p_heg) +
                          (m_trials - k) * std::log1p(-p_heg);
  return std::exp(log_term);
}

double link_success_at_least(double p_heg, int m_trials, int k) {
  require(is_probability(p_heg), "link_success_at_least: p_heg not in [0,1]");
  require(k >= 0 && k <= m_trials + 1, "link_success_at_least: k out of range");
  if (k == 0) return 1.0;
  if (k == m_trials + 1) return 0.0;
  if (k == 1) return -std::expm1(m_trials * std::log1p(-p_heg));

  double head = 0.0;
  for (int j = 0; j < k; ++j) head += link_success_pmf(p_heg, m_trials, j);
  if (head < 0.999) return 1.0 - head;
  // Tiny tail: the complement would cancel, so sum it directly.
  double tail = 0.0;
  for (int j = k; j <= m_trials; ++j) {
    const double term = link_success_pmf(p_heg, m_trials, j);
    tail += term;
    if (term < tail * 1e-18) break;
  }
  return tail;
}

double network_success_at_least(double p_heg, int m_trials, int k,
                                int n_links) {
  require(n_links >= 1, "network_success_at_least: n_links must be >= 1");
  return std::pow(link_success_at_least(p_heg, m_trials, k), n_links);
}

double network_success_exactly(double p_heg, int m_trials, int k,
                               int n_links) {
  const double at_k = network_success_at_least(p_heg, m_trials, k, n_links);
  const double at_k1 =
      k + 1 > m_trials ? 0.0
                       : network_success_at_least(p_heg, m_trials, k + 1,
                                                  n_links);
  return at_k - at_k1;
}

double session_duration(const NetworkParams& params, const SessionPlan& plan,
                        double l0_km) {
  const double t_rt = l0_km / params.v_km_per_s;
  return plan.num_trials * params.t_heg_s + t_rt +
         plan.link_purification * (params.t_pur_s + t_rt) + params.t_swap_s;
}

EprAttemptStats epr_attempt_stats(
    double p_session, const std::vector<double>& purification_success,
    const SessionPlan& plan, double t_session_s, double t_pur_s) {
  const int pe = plan.end_purification;
  require(static_cast<int>(purification_success.size()) == pe,
          "epr_attempt_stats: purification_success must have one entry per "
          "end-node round");
  EprAttemptStats out;
  out.t_epr_s = t_session_s * (pe + 1) + t_pur_s * pe;
  if (pe == 0) {
    out.p_epr = p_session;
    return out;
  }

  const double p = p_session;
  double all_rounds = 1.0;
  for (double q : purification_success) all_rounds *= q;
  const double full_success = (pe + 1) * std::pow(p, pe + 1) * all_rounds;

  double p_sum = full_success;
  // A session failure after s-1 good sessions consumes s sessions.
  for (int s = 1; s <= pe + 1; ++s) {
    double q_prod = 1.0;
    for (int h = 1; h <= s - 2; ++h) q_prod *= purification_success[h - 1];
    p_sum += s * std::pow(p, s - 1) * (1.0 - p) * q_prod;
  }
  // A failed round h consumes the h+1 sessions built so far.
  for (int h = 1; h <= pe; ++h) {
    double q_prod = 1.0;
    for (int hp = 1; hp <= h - 1; ++hp) q_prod *= purification_success[hp - 1];
    p_sum += (h + 1) * std::pow(p, h + 1) *
             (1.0 - purification_success[h - 1]) * q_prod;
  }
  out.p_epr = p_sum > 0.0 ? full_success / p_sum : 0.0;
  return out;
}

double binary_entropy(double p) {
  require(is_probability(p), "binary_entropy: p not in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double secret_fraction(double e_x, double e_z) {
  return 1.0 - binary_entropy(e_z) - binary_entropy(e_x);
}

QubitCount qubits_per_node(const NetworkParams& params,
                           const SessionPlan& plan, double l0_km) {
  require(l0_km > 0.0, "qubits_per_node: l0_km must be positive");
  const double t_rt = l0_km / params.v_km_per_s;
  const int multiplex = static_cast<int>(std::ceil(t_rt / params.t_heg_s));
  const int half = 1 + 2 * plan.link_purification + multiplex;
  return QubitCount{2 * half, half + plan.end_purification};
}

double plob_bound(double l_tot_km, double l_att_km,
                  double repetition_rate_hz) {
  require(l_tot_km >= 0.0, "plob_bound: l_tot_km must be non-negative");
  require(l_att_km > 0.0, "plob_bound: l_att_km must be positive");
  const double eta_ch = std::exp(-l_tot_km / l_att_km);
  if (eta_ch >= 1.0) return std::numeric_limits<double>::infinity();
  // -log2(1 - eta_ch), kept accurate for eta_ch far below double epsilon.
  const double per_use = -std::log1p(-eta_ch) / std::log(2.0);
  return per_use * repetition_rate_hz;
}

}  // namespace qrate
