#include "qrate/ensemble.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qrate {

namespace {

double sq_dist(const BellDiagonal& x, const BellDiagonal& y) {
  const double da = x.a - y.a, db = x.b - y.b, dc = x.c - y.c, dd = x.d - y.d;
  return da * da + db * db + dc * dc + dd * dd;
}

}  // namespace

double WeightedEnsemble::total_weight() const {
  double w = 0.0;
  for (const auto& s : sets) w += s.weight;
  return w;
}

BellDiagonal WeightedEnsemble::mean() const {
  if (sets.empty()) throw std::domain_error("WeightedEnsemble: empty");
  double w = 0.0;
  BellDiagonal acc{0.0, 0.0, 0.0, 0.0};
  for (const auto& s : sets) {
    w += s.weight;
    acc.a += s.weight * s.state.a;
    acc.b += s.weight * s.state.b;
    acc.c += s.weight * s.state.c;
    acc.d += s.weight * s.state.d;
  }
  if (w <= 0.0) throw std::domain_error("WeightedEnsemble: zero weight");
  acc.a /= w;
  acc.b /= w;
  acc.c /= w;
  acc.d /= w;
  return acc.cleaned();
}

void cap_ensemble(WeightedEnsemble& ens, int iterations) {
  const int n = static_cast<int>(ens.sets.size());
  const int k = ens.cap;
  if (n <= k || k < 1) return;

  // Farthest-point seeding: the heaviest set first, then whichever set is
  // farthest from every chosen center. Ties break on the lower index.
  std::vector<int> centers;
  centers.reserve(k);
  int first = 0;
  for (int i = 1; i < n; ++i)
    if (ens.sets[i].weight > ens.sets[first].weight) first = i;
  centers.push_back(first);

  std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
  std::vector<BellDiagonal> centroid(k);
  centroid[0] = ens.sets[first].state;
  for (int c = 1; c < k; ++c) {
    int far = -1;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double d = sq_dist(ens.sets[i].state, centroid[c - 1]);
      if (d < min_dist[i]) min_dist[i] = d;
      if (min_dist[i] > best) {
        best = min_dist[i];
        far = i;
      }
    }
    centers.push_back(far);
    centroid[c] = ens.sets[far].state;
  }

  std::vector<int> assign(n, -1);
  for (int it = 0; it < iterations; ++it) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best_c = 0;
      double best_d = sq_dist(ens.sets[i].state, centroid[0]);
      for (int c = 1; c < k; ++c) {
        const double d = sq_dist(ens.sets[i].state, centroid[c]);
        if (d < best_d) {
          best_d = d;
          best_c = c;
        }
      }
      if (assign[i] != best_c) {
        assign[i] = best_c;
        changed = true;
      }
    }
    if (!changed) break;

    std::vector<double> wsum(k, 0.0);
    std::vector<std::array<double, 4>> acc(k, {0.0, 0.0, 0.0, 0.0});
    for (int i = 0; i < n; ++i) {
      const auto& s = ens.sets[i];
      wsum[assign[i]] += s.weight;
      acc[assign[i]][0] += s.weight * s.state.a;
      acc[assign[i]][1] += s.weight * s.state.b;
      acc[assign[i]][2] += s.weight * s.state.c;
      acc[assign[i]][3] += s.weight * s.state.d;
    }
    for (int c = 0; c < k; ++c) {
      if (wsum[c] <= 0.0) continue;  // empty cluster keeps its old centroid
      centroid[c] = BellDiagonal{acc[c][0] / wsum[c], acc[c][1] / wsum[c],
                                 acc[c][2] / wsum[c], acc[c][3] / wsum[c]};
    }
  }

  // Replace each non-empty cluster by its weighted centroid, keeping the
  // cluster weight so the total is unchanged.
  std::vector<double> wsum(k, 0.0);
  std::vector<std::array<double, 4>> acc(k, {0.0, 0.0, 0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    const auto& s = ens.sets[i];
    wsum[assign[i]] += s.weight;
    acc[assign[i]][0] += s.weight * s.state.a;
    acc[assign[i]][1] += s.weight * s.state.b;
    acc[assign[i]][2] += s.weight * s.state.c;
    acc[assign[i]][3] += s.weight * s.state.d;
  }
  std::vector<WeightedState> merged;
  merged.reserve(k);
  for (int c = 0; c < k; ++c) {
    if (wsum[c] <= 0.0) continue;
    BellDiagonal rep{acc[c][0] / wsum[c], acc[c][1] / wsum[c],
                     acc[c][2] / wsum[c], acc[c][3] / wsum[c]};
    merged.push_back(WeightedState{wsum[c], rep.cleaned()});
  }
  ens.sets = std::move(merged);
}

}  // namespace qrate
