#pragma once

#include <vector>

#include "qrate/bell.hpp"

namespace qrate {

struct WeightedState {
  double weight = 0.0;
  BellDiagonal state;
};

/// Probability-weighted mixture of Bell-diagonal states. The number of sets
/// is kept at or below cap by merging nearby states.
struct WeightedEnsemble {
  std::vector<WeightedState> sets;
  int cap = 100;

  double total_weight() const;
  BellDiagonal mean() const;  ///< weight-averaged coefficients, renormalized
};

/// Merge the ensemble down to at most ens.cap sets with weighted k-means on
/// the coefficient 4-vectors: farthest-point seeding, up to `iterations`
/// assignment rounds, cluster representative = weighted centroid. Total
/// weight is preserved exactly up to rounding.
void cap_ensemble(WeightedEnsemble& ens, int iterations = 25);

}  // namespace qrate
