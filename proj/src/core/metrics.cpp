#include "core/metrics.hpp"

#include <cmath>

namespace dcg {

namespace {

void check_target(const Mat& target) {
  if (unitarity_defect(target) > 1e-10) throw ConfigError("target matrix is not unitary");
}

}  // namespace

double average_gate_fidelity(const GateChannel& channel, const Mat& target) {
  check_target(target);
  const int d = static_cast<int>(target.rows());
  if (channel.total_dim < d) throw ConfigError("channel dimension below target dimension");

  if (!channel.is_process) {
    Mat ucc = channel.rep.block(0, 0, d, d);
    double tr = std::abs((target.adjoint() * ucc).trace());
    return (tr * tr + d) / (d * (d + 1.0));
  }

  // entanglement fidelity F_e = (1/d^2) sum_ij <i|U^dag E(|i><j|) U|j>
  Complex fe = 0.0;
  const int n = channel.total_dim;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Mat rho = Mat::Zero(n, n);
      rho(i, j) = 1.0;
      Mat out = channel.apply(rho);
      Mat out_cc = out.block(0, 0, d, d);
      Mat w = target.adjoint() * out_cc * target;
      fe += w(i, j);
    }
  }
  double f_e = fe.real() / (d * d);
  return (d * f_e + 1.0) / (d + 1.0);
}

double unitary_infidelity(const Mat& u, const Mat& target) {
  check_target(target);
  Mat ucc = u.block(0, 0, 2, 2);
  Mat e = target.adjoint() * ucc;
  // E = c0 I + c . sigma; infidelity = (2/3)(1 - |c0|^2) = (2/3)(|cx|^2+|cy|^2+|cz|^2)
  // for exactly unitary E; evaluate from the traceless part to dodge cancellation.
  Complex cx = 0.5 * (e(0, 1) + e(1, 0));
  Complex cy = 0.5 * Complex(0, 1) * (e(0, 1) - e(1, 0));
  Complex cz = 0.5 * (e(0, 0) - e(1, 1));
  double n2 = std::norm(cx) + std::norm(cy) + std::norm(cz);
  // leakage out of the block (3-level case) shows up as |c0|^2 + n2 < 1; only
  // fold it in when it clears roundoff, so deep sub-1e-14 values stay exact
  Complex c0 = 0.5 * (e(0, 0) + e(1, 1));
  double deficit = 1.0 - std::norm(c0) - n2;
  if (deficit > 1e-12) return (2.0 / 3.0) * (n2 + deficit);
  return (2.0 / 3.0) * n2;
}

double leakage_population(const GateChannel& channel, const Mat& initial_state) {
  if (channel.total_dim < 3) throw ConfigError("channel has no leakage space");
  const int n = channel.total_dim;
  Mat rho = Mat::Zero(n, n);
  rho.block(0, 0, 2, 2) = initial_state;
  Mat out = channel.apply(rho);
  return out(2, 2).real();
}

}  // namespace dcg
