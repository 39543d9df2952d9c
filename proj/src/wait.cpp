#include "qrate/wait.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrate {

double WaitDistribution::at(int m) const {
  const int i = m - m_min;
  if (i < 0 || i >= static_cast<int>(pmf.size())) return 0.0;
  return pmf[i];
}

void WaitDistribution::normalize_and_finish() {
  const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
  if (total <= 0.0) {
    // Degenerate branch (zero weight upstream): pin the support minimum.
    std::fill(pmf.begin(), pmf.end(), 0.0);
    if (!pmf.empty()) pmf.front() = 1.0;
    mean_m = m_min;
    return;
  }
  mean_m = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    pmf[i] /= total;
    mean_m += (m_min + static_cast<int>(i)) * pmf[i];
  }
}

std::vector<double> multiplicity_counts(int n_links, int m_trials, int m_max) {
  if (n_links < 1) throw std::invalid_argument("multiplicity_counts: n_links");
  if (m_trials < 1)
    throw std::invalid_argument("multiplicity_counts: m_trials");
  if (m_max < 0 || m_max > n_links * (m_trials - 1))
    throw std::invalid_argument(
        "multiplicity_counts: m_max outside [0, n_links*(m_trials-1)]");

  // c^(1)(m) = 1 on [0, m_trials-1]; each extra link convolves with the same
  // window, done here with a sliding sum.
  std::vector<double> counts(m_max + 1, 0.0);
  for (int m = 0; m <= std::min(m_max, m_trials - 1); ++m) counts[m] = 1.0;
  for (int link = 2; link <= n_links; ++link) {
    std::vector<double> next(m_max + 1, 0.0);
    double window = 0.0;
    for (int m = 0; m <= m_max; ++m) {
      window += counts[m];
      if (m - m_trials >= 0) window -= counts[m - m_trials];
      next[m] = window;
    }
    counts.swap(next);
  }
  return counts;
}

WaitDistribution network_wait_pmf(int n_links, int m_trials, double p_heg) {
  if (p_heg <= 0.0 || p_heg > 1.0)
    throw std::invalid_argument("network_wait_pmf: p_heg must be in (0,1]");
  if (n_links < 1 || m_trials < 1)
    throw std::invalid_argument("network_wait_pmf: bad n_links or m_trials");

  // Built as the n_links-fold convolution of the per-link conditional
  // geometric, which is numerically stable for any multiplicity count.
  const double q = 1.0 - p_heg;
  std::vector<double> link(m_trials, 0.0);
  double w = 1.0;
  for (int m = 0; m < m_trials; ++m, w *= q) link[m] = w;

  std::vector<double> pmf = link;
  for (int n = 2; n <= n_links; ++n) {
    std::vector<double> next(pmf.size() + m_trials - 1, 0.0);
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      if (pmf[i] == 0.0) continue;
      for (int j = 0; j < m_trials; ++j) next[i + j] += pmf[i] * link[j];
    }
    pmf.swap(next);
  }

  WaitDistribution out;
  out.m_min = 0;
  out.pmf = std::move(pmf);
  out.normalize_and_finish();
  return out;
}

double single_link_wait_mean(double p_heg, int m_trials) {
  if (p_heg <= 0.0 || p_heg > 1.0)
    throw std::invalid_argument("single_link_wait_mean: p_heg");
  const double q = 1.0 - p_heg;
  double w = 1.0, total = 0.0, mean = 0.0;
  for (int m = 0; m < m_trials; ++m, w *= q) {
    total += w;
    mean += m * w;
  }
  return mean / total;
}

LinkTimings link_timing_models(int m_trials, double p_heg,
                               const NetworkParams& params, double l0_km) {
  if (m_trials < 3)
    throw std::invalid_argument(
        "link_timing_models: purification timing needs m_trials >= 3");
  if (p_heg <= 0.0 || p_heg > 1.0)
    throw std::invalid_argument("link_timing_models: p_heg must be in (0,1]");

  const double p = p_heg;
  const double q = 1.0 - p;
  LinkTimings out;

  // One or two successes only; m runs from the last success to the end.
  {
    out.no_pur.m_min = 0;
    out.no_pur.pmf.resize(m_trials);
    const double one = p * std::pow(q, m_trials - 1);
    const double two = p * p * std::pow(q, m_trials - 2);
    for (int m = 0; m < m_trials; ++m)
      out.no_pur.pmf[m] = one + two * (m_trials - m - 1);
    out.no_pur.normalize_and_finish();
  }

  // Third-last success with exactly two later ones among the m trials after.
  {
    out.reserve.m_min = 2;
    out.reserve.pmf.resize(m_trials - 2);
    double qpow = 1.0;  // q^(m-2)
    for (int m = 2; m < m_trials; ++m, qpow *= q)
      out.reserve.pmf[m - 2] = qpow * (m * (m - 1) / 2.0);
    out.reserve.normalize_and_finish();
  }

  // Joint law of the waits after the last (m1) and second-last (m2)
  // successes; m1 is uniform below m2, so only the m2 loop is needed.
  {
    double z = 0.0, sum_m2 = 0.0, sum_m1 = 0.0;
    double qpow = 1.0;  // q^(m2-1)
    for (int m2 = 1; m2 <= m_trials - 2; ++m2, qpow *= q) {
      const double w2 = qpow * -std::expm1((m_trials - m2 - 1) * std::log1p(-p));
      z += m2 * w2;
      sum_m2 += m2 * m2 * w2;
      sum_m1 += w2 * (m2 * (m2 - 1) / 2.0);
    }
    if (z > 0.0) {
      out.mean_m2 = sum_m2 / z;
      out.mean_m1 = sum_m1 / z;
    } else {
      out.mean_m2 = 1.0;
      out.mean_m1 = 0.0;
    }
  }

  const double p1 = link_success_at_least(p, m_trials, 1);
  const double p3 = link_success_at_least(p, m_trials, 3);
  out.p_pur = p1 > 0.0 ? std::min(p3 / p1, 1.0) : 0.0;

  const double t_rt = l0_km / params.v_km_per_s;
  const double tail = 2.0 * t_rt + params.t_pur_s + params.t_swap_s;
  out.t_no_pur_s = 2.0 * (out.no_pur.mean_m * params.t_heg_s + tail);
  out.t_reserve_s = 2.0 * (out.reserve.mean_m * params.t_heg_s + tail);
  out.t_pair1_s = 2.0 * (out.mean_m1 * params.t_heg_s + t_rt);
  out.t_pair2_s = 2.0 * (out.mean_m2 * params.t_heg_s + t_rt);
  return out;
}

}  // namespace qrate
