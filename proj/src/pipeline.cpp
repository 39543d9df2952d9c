#include "qrate/pipeline.hpp"

#include <cmath>
#include <stdexcept>

namespace qrate {

namespace {

/// m-fold swap of identical pairs by repeated squaring. One copy is the
/// neutral input: swapping with a perfect pair returns the other state.
BellDiagonal swap_power(BellDiagonal s, int copies) {
  if (copies < 1) throw std::invalid_argument("swap_power: copies");
  BellDiagonal acc = perfect_pair();
  while (copies > 0) {
    if (copies & 1) acc = entanglement_swap(acc, s);
    copies >>= 1;
    if (copies > 0) s = entanglement_swap(s, s);
  }
  return acc;
}

}  // namespace

LinkEnsembleResult link_ensemble(const NetworkParams& params,
                                 const SessionPlan& plan, double l0_km) {
  params.validate();
  plan.validate();
  const double eta = detection_efficiency(params, l0_km);
  const double p_heg = heg_success_probability(eta);
  if (p_heg <= 0.0)
    throw std::invalid_argument("link_ensemble: p_heg must be positive");

  const BellDiagonal base = from_initialization(params.eps_init, 1);
  const double t_rt = l0_km / params.v_km_per_s;

  LinkEnsembleResult out;
  if (plan.link_purification == 0) {
    const double mean_m = single_link_wait_mean(p_heg, plan.num_trials);
    const double t_wait =
        2.0 * (mean_m * params.t_heg_s + t_rt + params.t_swap_s);
    out.ensemble.sets.push_back(
        WeightedState{1.0, apply_dephasing(base, t_wait, params.t2_s)});
    return out;
  }

  const LinkTimings timing =
      link_timing_models(plan.num_trials, p_heg, params, l0_km);
  out.p_pur_used = timing.p_pur;

  // Fewer than three pairs: the latest pair rides through the purification
  // slot untouched.
  if (timing.p_pur < 1.0) {
    out.ensemble.sets.push_back(WeightedState{
        1.0 - timing.p_pur,
        apply_dephasing(base, timing.t_no_pur_s, params.t2_s)});
  }

  if (timing.p_pur > 0.0) {
    const BellDiagonal pair1 = apply_depolarizing(
        apply_dephasing(base, timing.t_pair1_s, params.t2_s), params.eps_tqg,
        1);
    const BellDiagonal pair2 = apply_depolarizing(
        apply_dephasing(base, timing.t_pair2_s, params.t2_s), params.eps_tqg,
        1);
    const PurifyOutcome pur =
        purify(pair1, pair2, params.eps_tqg, params.eps_meas);
    const double t_after =
        2.0 * (params.t_pur_s + t_rt + params.t_swap_s);

    if (pur.p_measured < 1.0) {
      out.ensemble.sets.push_back(WeightedState{
          timing.p_pur * (1.0 - pur.p_measured),
          apply_dephasing(base, timing.t_reserve_s, params.t2_s)});
    }
    out.ensemble.sets.push_back(WeightedState{
        timing.p_pur * pur.p_measured,
        apply_dephasing(pur.measured_state, t_after, params.t2_s)});
  }
  return out;
}

WeightedEnsemble chain_links(const std::vector<WeightedEnsemble>& links,
                             const NetworkParams& params,
                             const SessionPlan& plan) {
  if (links.empty()) throw std::invalid_argument("chain_links: no links");
  const int n = static_cast<int>(links.size());
  if (n != plan.num_links)
    throw std::invalid_argument("chain_links: plan.num_links mismatch");

  WeightedEnsemble acc = links.front();
  for (int i = 1; i < n; ++i) {
    WeightedEnsemble next;
    next.cap = acc.cap;
    next.sets.reserve(acc.sets.size() * links[i].sets.size());
    for (const auto& l : acc.sets)
      for (const auto& r : links[i].sets)
        next.sets.push_back(WeightedState{
            l.weight * r.weight, entanglement_swap(l.state, r.state)});
    if (static_cast<int>(next.sets.size()) > next.cap) cap_ensemble(next);
    acc = std::move(next);
  }

  for (auto& s : acc.sets) {
    s.state = apply_depolarizing(s.state, params.eps_tqg, n - 1);
    s.state = apply_swap_measurement_errors(s.state, params.eps_meas, n);
  }
  return acc;
}

EndNodeResult end_node_chain(const WeightedEnsemble& session_ensemble,
                             const NetworkParams& params,
                             const SessionPlan& plan, double t_session_s) {
  const BellDiagonal session_mean = session_ensemble.mean();
  EndNodeResult out;
  if (plan.end_purification == 0) {
    out.final_state = session_mean;
    return out;
  }

  // The Pauli frame is only known once the swap outcomes reach an end node.
  const double t_classical = params.l_tot_km / (2.0 * params.v_km_per_s);
  BellDiagonal held =
      apply_dephasing(session_mean, t_session_s + t_classical, params.t2_s);
  for (int round = 1; round <= plan.end_purification; ++round) {
    if (round > 1) held = apply_dephasing(held, t_session_s, params.t2_s);
    const BellDiagonal incoming =
        apply_dephasing(session_mean, t_classical, params.t2_s);
    const BellDiagonal in1 = apply_depolarizing(held, params.eps_tqg, 1);
    const BellDiagonal in2 = apply_depolarizing(incoming, params.eps_tqg, 1);
    const PurifyOutcome pur = purify(in1, in2, params.eps_tqg, params.eps_meas);
    out.pur_success.push_back(pur.p_measured);
    held = apply_dephasing(pur.measured_state, params.t_pur_s, params.t2_s);
  }
  out.final_state = held;
  return out;
}

RateReport evaluate_protocol(const NetworkParams& params,
                             const SessionPlan& plan,
                             const EvalOptions& options) {
  params.validate();
  plan.validate();

  RateReport report;
  report.l0_km = params.l_tot_km / plan.num_links;
  report.eta = detection_efficiency(params, report.l0_km);
  report.p_heg = heg_success_probability(report.eta);
  report.t_session_s = session_duration(params, plan, report.l0_km);
  report.p_session = network_success_at_least(report.p_heg, plan.num_trials,
                                              1, plan.num_links);

  if (report.p_heg <= 0.0 || report.p_session <= 0.0) {
    report.bell = perfect_pair();
    report.r_inf = secret_fraction(0.0, 0.0);
    report.t_epr_s = report.t_session_s * (plan.end_purification + 1) +
                     params.t_pur_s * plan.end_purification;
    return report;  // rate and key rate stay zero
  }

  const LinkEnsembleResult link = link_ensemble(params, plan, report.l0_km);

  WeightedEnsemble session;
  if (options.mode == EvalMode::kEnsemble) {
    std::vector<WeightedEnsemble> links(plan.num_links, link.ensemble);
    for (auto& l : links) l.cap = options.ensemble_cap;
    session = chain_links(links, params, plan);
  } else {
    BellDiagonal s = swap_power(link.ensemble.mean(), plan.num_links);
    s = apply_depolarizing(s, params.eps_tqg, plan.num_links - 1);
    s = apply_swap_measurement_errors(s, params.eps_meas, plan.num_links);
    session.sets.push_back(WeightedState{1.0, s});
  }

  const EndNodeResult end =
      end_node_chain(session, params, plan, report.t_session_s);
  report.bell = end.final_state;
  report.pur_success = end.pur_success;

  const QubitErrors err = quantum_bit_errors(report.bell);
  report.e_x = err.e_x;
  report.e_z = err.e_z;
  report.r_inf = secret_fraction(report.e_x, report.e_z);

  const EprAttemptStats stats =
      epr_attempt_stats(report.p_session, report.pur_success, plan,
                        report.t_session_s, params.t_pur_s);
  report.p_epr = stats.p_epr;
  report.t_epr_s = stats.t_epr_s;
  report.rate_hz = report.p_epr / report.t_epr_s;
  report.skr_hz = report.rate_hz * std::max(report.r_inf, 0.0);
  return report;
}

}  // namespace qrate
