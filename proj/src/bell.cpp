#include "qrate/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace qrate {

namespace {

constexpr double kNegClamp = 1e-12;

double clamp_coeff(double x) {
  if (x < 0.0 && x > -kNegClamp) return 0.0;
  return x;
}

}  // namespace

BellDiagonal BellDiagonal::cleaned() const {
  BellDiagonal out{clamp_coeff(a), clamp_coeff(b), clamp_coeff(c),
                   clamp_coeff(d)};
  // Coefficients more negative than the clamp indicate a real bug upstream.
  if (out.a < 0.0 || out.b < 0.0 || out.c < 0.0 || out.d < 0.0)
    throw std::domain_error("BellDiagonal: negative coefficient beyond clamp");
  const double s = out.sum();
  if (s <= 0.0) throw std::domain_error("BellDiagonal: vanishing state");
  out.a /= s;
  out.b /= s;
  out.c /= s;
  out.d /= s;
  return out;
}

bool BellDiagonal::almost_equal(const BellDiagonal& other, double tol) const {
  return std::abs(a - other.a) <= tol && std::abs(b - other.b) <= tol &&
         std::abs(c - other.c) <= tol && std::abs(d - other.d) <= tol;
}

BellDiagonal from_initialization(double eps_init, int n_links) {
  if (n_links < 1) throw std::invalid_argument("from_initialization: n_links");
  // Parity of 2*n_links independent phase errors: odd counts -> b, even -> c.
  const double g = std::pow(1.0 - 2.0 * eps_init, 2 * n_links);
  return BellDiagonal{0.0, (1.0 - g) / 2.0, (1.0 + g) / 2.0, 0.0}.cleaned();
}

BellDiagonal apply_depolarizing(const BellDiagonal& s, double eps_tqg,
                                int n_gates) {
  if (n_gates < 0) throw std::invalid_argument("apply_depolarizing: n_gates");
  if (n_gates == 0 || eps_tqg == 0.0) return s;
  const double g = std::pow(1.0 - 4.0 * eps_tqg / 3.0, n_gates);
  auto mix = [g](double x) { return 0.25 + (x - 0.25) * g; };
  return BellDiagonal{mix(s.a), mix(s.b), mix(s.c), mix(s.d)}.cleaned();
}

BellDiagonal apply_swap_measurement_errors(const BellDiagonal& s, double eps_m,
                                           int n_links) {
  if (n_links < 1)
    throw std::invalid_argument("apply_swap_measurement_errors: n_links");
  const int k = n_links - 1;
  if (k == 0 || eps_m == 0.0) return s;
  const double g1 = std::pow(1.0 - 2.0 * eps_m, k);
  const double g2 = g1 * g1;
  // y is the bit-and-phase partner of x.
  auto mixed = [g1, g2](double x, double y) {
    return x + (x + y - 0.5) / 2.0 * (g2 - 1.0) + (x - y) / 2.0 * (g1 - 1.0);
  };
  return BellDiagonal{mixed(s.a, s.b), mixed(s.b, s.a), mixed(s.c, s.d),
                      mixed(s.d, s.c)}
      .cleaned();
}

BellDiagonal apply_dephasing(const BellDiagonal& s, double t_wait, double t2) {
  if (t_wait < 0.0) throw std::invalid_argument("apply_dephasing: t_wait");
  if (t2 <= 0.0) throw std::invalid_argument("apply_dephasing: t2");
  const double f = std::exp(-t_wait / t2);
  if (f == 1.0) return s;
  // z is the phase partner of x.
  auto mixed = [f](double x, double z) {
    return (x + z) / 2.0 + (x - z) / 2.0 * f;
  };
  return BellDiagonal{mixed(s.a, s.d), mixed(s.b, s.c), mixed(s.c, s.b),
                      mixed(s.d, s.a)}
      .cleaned();
}

BellDiagonal entanglement_swap(const BellDiagonal& l, const BellDiagonal& r) {
  return BellDiagonal{
      l.a * r.c + l.c * r.a + l.b * r.d + l.d * r.b,
      l.a * r.d + l.d * r.a + l.b * r.c + l.c * r.b,
      l.a * r.a + l.b * r.b + l.c * r.c + l.d * r.d,
      l.a * r.b + l.b * r.a + l.c * r.d + l.d * r.c,
  }
      .cleaned();
}

namespace {

// Unnormalized success/fail numerators shared by purify_branches and purify.
struct RawBranches {
  double p_success;
  std::array<double, 4> success;
  double p_fail;
  std::array<double, 4> fail;
};

RawBranches purify_raw(const BellDiagonal& p1, const BellDiagonal& p2,
                       double eps_tqg) {
  const double ab1 = p1.a + p1.b, ab2 = p2.a + p2.b;
  const double cd1 = p1.c + p1.d, cd2 = p2.c + p2.d;
  const double e3 = eps_tqg / 3.0;

  RawBranches out;
  out.p_success = ab1 * ab2 + cd1 * cd2;
  const double ks = e3 * (cd1 * cd2 - ab1 * ab2);
  out.success = {
      p1.a * p2.a + p1.b * p2.b + ks,
      p1.c * p2.d + p1.d * p2.c - ks,
      p1.c * p2.c + p1.d * p2.d - ks,
      p1.a * p2.b + p1.b * p2.a + ks,
  };

  out.p_fail = ab1 * cd2 + cd1 * ab2;
  const double kf = e3 * (cd1 * ab2 - ab1 * cd2);
  out.fail = {
      p1.a * p2.c + p1.b * p2.d + kf,
      p1.d * p2.a + p1.c * p2.b - kf,
      p1.c * p2.a + p1.d * p2.b - kf,
      p1.a * p2.d + p1.b * p2.c + kf,
  };
  return out;
}

BellDiagonal normalize_branch(const std::array<double, 4>& num, double p) {
  if (p <= 0.0) return BellDiagonal{0.0, 0.0, 0.0, 0.0};
  return BellDiagonal{num[0] / p, num[1] / p, num[2] / p, num[3] / p}
      .cleaned();
}

}  // namespace

PurifyBranches purify_branches(const BellDiagonal& pair1,
                               const BellDiagonal& pair2, double eps_tqg) {
  const RawBranches raw = purify_raw(pair1, pair2, eps_tqg);
  PurifyBranches out;
  out.p_success = raw.p_success;
  out.success = normalize_branch(raw.success, raw.p_success);
  out.p_fail = raw.p_fail;
  out.fail = normalize_branch(raw.fail, raw.p_fail);
  return out;
}

PurifyOutcome purify(const BellDiagonal& pair1, const BellDiagonal& pair2,
                     double eps_tqg, double eps_m) {
  const RawBranches raw = purify_raw(pair1, pair2, eps_tqg);
  // The herald reads "success" when both measurements are right or both are
  // wrong; a single misread reports the opposite branch.
  const double w_true = (1.0 - eps_m) * (1.0 - eps_m) + eps_m * eps_m;
  const double w_cross = 2.0 * (1.0 - eps_m) * eps_m;

  PurifyOutcome out;
  out.p_success_true = raw.p_success;
  out.p_measured = w_true * raw.p_success + w_cross * raw.p_fail;
  if (out.p_measured <= 0.0)
    throw std::domain_error("purify: heralded success probability is zero");
  std::array<double, 4> num{};
  for (int i = 0; i < 4; ++i)
    num[i] = w_true * raw.success[i] + w_cross * raw.fail[i];
  out.measured_state = normalize_branch(num, out.p_measured);
  return out;
}

QubitErrors quantum_bit_errors(const BellDiagonal& s) {
  return QubitErrors{s.b + s.d, s.a + s.d};
}

}  // namespace qrate
