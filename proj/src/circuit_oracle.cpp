#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qrate/montecarlo.hpp"

// Brute-force oracles: evolve every Bell x Bell component of the two-pair
// mixture as a four-qubit state vector through the actual circuits and read
// the result back in the Bell basis. Deliberately independent of the
// coefficient algebra in bell.cpp.

namespace qrate {

namespace {

using Cx = std::complex<double>;
using State = std::array<Cx, 16>;  // qubit 0 is the most significant bit

constexpr double kInvSqrt2 = 0.70710678118654752440;

int bit_of(int index, int qubit) { return (index >> (3 - qubit)) & 1; }

int with_bit_flipped(int index, int qubit) { return index ^ (1 << (3 - qubit)); }

/// Product state of Bell state `bell1` on qubits (q1a, q1b) and `bell2` on
/// (q2a, q2b). Bell index order: 0 a, 1 b, 2 c, 3 d.
State bell_product(int bell1, int q1a, int q1b, int bell2, int q2a, int q2b) {
  auto amp = [](int bell, int x, int y) -> Cx {
    switch (bell) {
      case 0: return (x == y) ? Cx(kInvSqrt2) : Cx(0.0);            // |00>+|11>
      case 1: return (x == y) ? Cx(0.0) : Cx(x == 0 ? kInvSqrt2 : -kInvSqrt2);
      case 2: return (x == y) ? Cx(0.0) : Cx(kInvSqrt2);            // |01>+|10>
      case 3: return (x == y) ? Cx(x == 0 ? kInvSqrt2 : -kInvSqrt2) : Cx(0.0);
      default: throw std::invalid_argument("bell_product: bad index");
    }
  };
  State s{};
  for (int i = 0; i < 16; ++i)
    s[i] = amp(bell1, bit_of(i, q1a), bit_of(i, q1b)) *
           amp(bell2, bit_of(i, q2a), bit_of(i, q2b));
  return s;
}

void apply_cnot(State& s, int control, int target) {
  for (int i = 0; i < 16; ++i) {
    if (bit_of(i, control) == 1 && bit_of(i, target) == 0) {
      const int j = with_bit_flipped(i, target);
      std::swap(s[i], s[j]);
    }
  }
}

void apply_hadamard(State& s, int qubit) {
  for (int i = 0; i < 16; ++i) {
    if (bit_of(i, qubit) == 0) {
      const int j = with_bit_flipped(i, qubit);
      const Cx lo = s[i], hi = s[j];
      s[i] = kInvSqrt2 * (lo + hi);
      s[j] = kInvSqrt2 * (lo - hi);
    }
  }
}

/// exp(-i angle sigma_x / 2)
void apply_rx(State& s, int qubit, double angle) {
  const Cx cos_h(std::cos(angle / 2.0), 0.0);
  const Cx minus_i_sin_h(0.0, -std::sin(angle / 2.0));
  for (int i = 0; i < 16; ++i) {
    if (bit_of(i, qubit) == 0) {
      const int j = with_bit_flipped(i, qubit);
      const Cx lo = s[i], hi = s[j];
      s[i] = cos_h * lo + minus_i_sin_h * hi;
      s[j] = minus_i_sin_h * lo + cos_h * hi;
    }
  }
}

/// Pauli on one qubit; 0 = I, 1 = X, 2 = Y, 3 = Z.
void apply_pauli(State& s, int qubit, int pauli) {
  if (pauli == 0) return;
  for (int i = 0; i < 16; ++i) {
    if (bit_of(i, qubit) != 0) continue;
    const int j = with_bit_flipped(i, qubit);
    const Cx lo = s[i], hi = s[j];
    switch (pauli) {
      case 1: s[i] = hi; s[j] = lo; break;
      case 2: s[i] = Cx(0.0, -1.0) * hi; s[j] = Cx(0.0, 1.0) * lo; break;
      case 3: s[j] = -hi; break;
      default: throw std::invalid_argument("apply_pauli: bad pauli");
    }
  }
}

/// Unnormalized amplitudes of the (qa, qb) pair after qubits qm1, qm2 were
/// measured as o1, o2. Index = 2*bit(qa) + bit(qb).
std::array<Cx, 4> project_pair(const State& s, int qm1, int o1, int qm2,
                               int o2, int qa, int qb) {
  std::array<Cx, 4> out{};
  for (int i = 0; i < 16; ++i) {
    if (bit_of(i, qm1) != o1 || bit_of(i, qm2) != o2) continue;
    out[2 * bit_of(i, qa) + bit_of(i, qb)] += s[i];
  }
  return out;
}

std::array<double, 4> bell_overlaps(const std::array<Cx, 4>& psi) {
  const Cx a = kInvSqrt2 * (psi[0] + psi[3]);
  const Cx b = kInvSqrt2 * (psi[1] - psi[2]);
  const Cx c = kInvSqrt2 * (psi[1] + psi[2]);
  const Cx d = kInvSqrt2 * (psi[0] - psi[3]);
  return {std::norm(a), std::norm(b), std::norm(c), std::norm(d)};
}

void pauli_on_pair_second(std::array<Cx, 4>& psi, int pauli) {
  // Same Pauli conventions as apply_pauli, acting on the second qubit of the
  // extracted pair.
  const Cx p0 = psi[0], p1 = psi[1], p2 = psi[2], p3 = psi[3];
  switch (pauli) {
    case 0: break;
    case 1: psi = {p1, p0, p3, p2}; break;
    case 2:
      psi = {Cx(0.0, -1.0) * p1, Cx(0.0, 1.0) * p0, Cx(0.0, -1.0) * p3,
             Cx(0.0, 1.0) * p2};
      break;
    case 3: psi = {p0, -p1, p2, -p3}; break;
    default: throw std::invalid_argument("pauli_on_pair_second: bad pauli");
  }
}

/// Run the swap circuit on one Bell x Bell component without corrections and
/// hand every measurement branch to the visitor.
template <typename Visitor>
void swap_branches(int bell_left, int bell_right, Visitor&& visit) {
  // Qubits: 0 outer-left, 1 middle-left, 2 middle-right, 3 outer-right.
  State s = bell_product(bell_left, 0, 1, bell_right, 2, 3);
  apply_cnot(s, 1, 2);
  apply_hadamard(s, 1);  // X-basis readout of the control
  for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2)
      visit(o1, o2, project_pair(s, 1, o1, 2, o2, 0, 3));
}

/// Pauli-frame corrections per measurement branch, fixed once so that two
/// perfect pairs always come out perfect.
const std::array<std::array<int, 2>, 2>& swap_corrections() {
  static const auto table = [] {
    std::array<std::array<int, 2>, 2> t{};
    swap_branches(2, 2, [&t](int o1, int o2, std::array<Cx, 4> psi) {
      for (int pauli = 0; pauli < 4; ++pauli) {
        std::array<Cx, 4> fixed = psi;
        pauli_on_pair_second(fixed, pauli);
        const auto probs = bell_overlaps(fixed);
        if (probs[2] > 0.2499) {  // branch probability is 1/4
          t[o1][o2] = pauli;
          return;
        }
      }
      throw std::logic_error("swap oracle: no correction found");
    });
    return t;
  }();
  return table;
}

/// Purification circuit branches for one Bell x Bell component.
template <typename Visitor>
void purify_branches_raw(int bell1, int bell2, Visitor&& visit) {
  // Qubits: 0 pair1@A, 1 pair1@B, 2 pair2@A, 3 pair2@B.
  State s = bell_product(bell1, 0, 1, bell2, 2, 3);
  const double half_pi = std::acos(0.0);
  apply_rx(s, 0, half_pi);
  apply_rx(s, 2, half_pi);
  apply_rx(s, 1, -half_pi);
  apply_rx(s, 3, -half_pi);
  apply_cnot(s, 0, 2);
  apply_cnot(s, 1, 3);
  for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2)
      visit(o1, o2, project_pair(s, 2, o1, 3, o2, 0, 1));
}

struct PurifyCorrections {
  std::array<std::array<int, 2>, 2> pauli{};  // indexed [o1][o2]
};

const PurifyCorrections& purify_corrections() {
  static const PurifyCorrections table = [] {
    PurifyCorrections t;
    // Coinciding outcomes (success): calibrate on two perfect pairs.
    purify_branches_raw(2, 2, [&t](int o1, int o2, std::array<Cx, 4> psi) {
      if (o1 != o2) return;
      for (int pauli = 0; pauli < 4; ++pauli) {
        std::array<Cx, 4> fixed = psi;
        pauli_on_pair_second(fixed, pauli);
        if (bell_overlaps(fixed)[2] > 0.2499) {
          t.pauli[o1][o2] = pauli;
          return;
        }
      }
      throw std::logic_error("purify oracle: no success correction found");
    });
    // Differing outcomes (failure): calibrate on a pair combination that
    // fails deterministically into the c state.
    purify_branches_raw(2, 0, [&t](int o1, int o2, std::array<Cx, 4> psi) {
      if (o1 == o2) return;
      for (int pauli = 0; pauli < 4; ++pauli) {
        std::array<Cx, 4> fixed = psi;
        pauli_on_pair_second(fixed, pauli);
        if (bell_overlaps(fixed)[2] > 0.2499) {
          t.pauli[o1][o2] = pauli;
          return;
        }
      }
      throw std::logic_error("purify oracle: no failure correction found");
    });
    return t;
  }();
  return table;
}

}  // namespace

BellDiagonal circuit_oracle_swap(const BellDiagonal& left,
                                 const BellDiagonal& right) {
  const auto wl = left.coeffs();
  const auto wr = right.coeffs();
  const auto& fix = swap_corrections();
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (wl[i] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      if (wr[j] == 0.0) continue;
      const double w = wl[i] * wr[j];
      swap_branches(i, j, [&](int o1, int o2, std::array<Cx, 4> psi) {
        pauli_on_pair_second(psi, fix[o1][o2]);
        const auto probs = bell_overlaps(psi);
        for (int k = 0; k < 4; ++k) out[k] += w * probs[k];
      });
    }
  }
  return BellDiagonal{out[0], out[1], out[2], out[3]}.cleaned();
}

PurifyOracleResult circuit_oracle_purify(const BellDiagonal& pair1,
                                         const BellDiagonal& pair2) {
  const auto w1 = pair1.coeffs();
  const auto w2 = pair2.coeffs();
  const auto& fix = purify_corrections();
  std::array<double, 4> succ{}, fail{};
  for (int i = 0; i < 4; ++i) {
    if (w1[i] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      if (w2[j] == 0.0) continue;
      const double w = w1[i] * w2[j];
      purify_branches_raw(i, j, [&](int o1, int o2, std::array<Cx, 4> psi) {
        pauli_on_pair_second(psi, fix.pauli[o1][o2]);
        const auto probs = bell_overlaps(psi);
        auto& acc = (o1 == o2) ? succ : fail;
        for (int k = 0; k < 4; ++k) acc[k] += w * probs[k];
      });
    }
  }

  PurifyOracleResult out;
  out.p_success = succ[0] + succ[1] + succ[2] + succ[3];
  out.p_fail = fail[0] + fail[1] + fail[2] + fail[3];
  if (out.p_success > 0.0)
    out.success_state = BellDiagonal{succ[0] / out.p_success,
                                     succ[1] / out.p_success,
                                     succ[2] / out.p_success,
                                     succ[3] / out.p_success}
                            .cleaned();
  else
    out.success_state = BellDiagonal{0.0, 0.0, 0.0, 0.0};
  if (out.p_fail > 0.0)
    out.fail_state = BellDiagonal{fail[0] / out.p_fail, fail[1] / out.p_fail,
                                  fail[2] / out.p_fail, fail[3] / out.p_fail}
                         .cleaned();
  else
    out.fail_state = BellDiagonal{0.0, 0.0, 0.0, 0.0};
  return out;
}

}  // namespace qrate
