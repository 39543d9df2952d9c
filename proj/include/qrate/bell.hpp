#pragma once

#include <array>

namespace qrate {

/// Probability vector over the four Bell states.
///
/// The coefficients are the populations of, in order,
///   a: (|00> + |11>)/sqrt(2)
///   b: (|01> - |10>)/sqrt(2)
///   c: (|01> + |10>)/sqrt(2)   <- the state heralded entanglement aims for
///   d: (|00> - |11>)/sqrt(2)
/// All channels in this module keep the vector normalized; tiny negative
/// coefficients produced by cancellation are clamped to zero and the vector
/// renormalized.
struct BellDiagonal {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 0.0;

  double sum() const { return a + b + c + d; }
  std::array<double, 4> coeffs() const { return {a, b, c, d}; }

  /// Clamp sub-epsilon negatives to zero and renormalize to unit sum.
  BellDiagonal cleaned() const;

  bool almost_equal(const BellDiagonal& other, double tol) const;
};

/// Perfect pair: all population in the c coefficient.
inline BellDiagonal perfect_pair() { return {0.0, 0.0, 1.0, 0.0}; }

/// State of a fresh pair after 2*n_links qubit initializations, each of which
/// puts a phase error on its qubit with probability eps_init. An odd number of
/// errors lands in b, an even number in c.
BellDiagonal from_initialization(double eps_init, int n_links);

/// Two-qubit gate errors: each gate moves the state to any of the other three
/// Bell states with probability eps_tqg/3.  Closed form of n_gates
/// applications.
BellDiagonal apply_depolarizing(const BellDiagonal& s, double eps_tqg,
                                int n_gates);

/// Classical measurement errors from the N-1 entanglement swaps of an N-link
/// chain: each swap reads out two qubits, and each misread flips the Pauli
/// frame by a bit or a phase.
BellDiagonal apply_swap_measurement_errors(const BellDiagonal& s, double eps_m,
                                           int n_links);

/// Exponential dephasing of the c<->b and a<->d coherences; t_wait is the
/// summed entangled time of the qubits involved.  T2 may be infinite.
BellDiagonal apply_dephasing(const BellDiagonal& s, double t_wait, double t2);

/// Combine the left and right pair of a shared node into one longer pair.
BellDiagonal entanglement_swap(const BellDiagonal& left,
                               const BellDiagonal& right);

/// Raw success/failure branches of one purification attempt (before
/// measurement errors are mixed in).  Branch states are normalized; a branch
/// with zero probability carries an all-zero state.
struct PurifyBranches {
  double p_success = 0.0;
  BellDiagonal success;
  double p_fail = 0.0;
  BellDiagonal fail;
};

PurifyBranches purify_branches(const BellDiagonal& pair1,
                               const BellDiagonal& pair2, double eps_tqg);

/// Full heralded purification: success/fail branches plus the misread herald
/// mixing from the two qubit measurements.
struct PurifyOutcome {
  double p_measured = 0.0;      ///< probability the herald reads "success"
  BellDiagonal measured_state;  ///< state kept when the herald reads "success"
  double p_success_true = 0.0;  ///< probability the purification truly worked
};

/// Throws std::domain_error when p_measured is zero (nothing to post-select).
PurifyOutcome purify(const BellDiagonal& pair1, const BellDiagonal& pair2,
                     double eps_tqg, double eps_m);

struct QubitErrors {
  double e_x = 0.0;
  double e_z = 0.0;
};

/// Bit/phase error rates of a pair; c is the desired state.
QubitErrors quantum_bit_errors(const BellDiagonal& s);

}  // namespace qrate
