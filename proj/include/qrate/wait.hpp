#pragma once

#include <vector>

#include "qrate/network.hpp"

namespace qrate {

/// Distribution of m, the number of trials elapsed after the relevant
/// successful trial. pmf[i] is the probability of m = m_min + i.
struct WaitDistribution {
  int m_min = 0;
  std::vector<double> pmf;
  double mean_m = 0.0;

  int m_max() const { return m_min + static_cast<int>(pmf.size()) - 1; }
  double at(int m) const;
  void normalize_and_finish();  ///< scales pmf to unit sum and fills mean_m
};

/// Number of ways n_links per-link waits in [0, m_trials-1] can sum to m,
/// for m = 0 .. n_links*(m_trials-1).  Counts are exact in doubles for the
/// sizes used here.
std::vector<double> multiplicity_counts(int n_links, int m_trials, int m_max);

/// Trials wasted after the last success, summed over all links, conditioned
/// on every link having at least one success.
WaitDistribution network_wait_pmf(int n_links, int m_trials, double p_heg);

/// The three conditional timing models of a link that runs purification.
struct LinkTimings {
  WaitDistribution no_pur;   ///< m after the last success, fewer than 3 pairs
  WaitDistribution reserve;  ///< m after the third-last success
  double mean_m1 = 0.0;      ///< mean trials after the last success (>=3 pairs)
  double mean_m2 = 0.0;      ///< mean trials after the second-last success
  double p_pur = 0.0;        ///< chance purification can be attempted

  double t_no_pur_s = 0.0;   ///< expected pair age of the no-purification case
  double t_reserve_s = 0.0;  ///< expected pair age of the reserve pair
  double t_pair1_s = 0.0;    ///< expected age of the newest purified pair
  double t_pair2_s = 0.0;    ///< expected age of the second purified pair
};

/// Requires m_trials >= 3. Durations use the session layout where the link
/// waits through two heralding round trips plus the purification slot.
LinkTimings link_timing_models(int m_trials, double p_heg,
                               const NetworkParams& params, double l0_km);

/// Expected m of a single link conditioned on at least one success.
double single_link_wait_mean(double p_heg, int m_trials);

}  // namespace qrate
