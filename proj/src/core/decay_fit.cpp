#include "core/decay_fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "core/types.hpp"

namespace dcg {

double DecayFit::stderr_a() const { return std::sqrt(std::max(0.0, covariance[0][0])); }
double DecayFit::stderr_p() const { return std::sqrt(std::max(0.0, covariance[1][1])); }
double DecayFit::stderr_b() const { return std::sqrt(std::max(0.0, covariance[2][2])); }

DecayFit fit_decay(const std::vector<double>& lengths, const std::vector<double>& values) {
  if (lengths.size() != values.size()) throw FitError("length/value size mismatch");
  std::set<double> distinct(lengths.begin(), lengths.end());
  if (distinct.size() < 3) throw FitError("need at least 3 distinct lengths");
  const std::size_t n = lengths.size();

  double head = values.front(), tail = values.back();
  double vmin = *std::min_element(values.begin(), values.end());
  double vmax = *std::max_element(values.begin(), values.end());

  DecayFit fit;
  if (vmax - vmin < 1e-12) {  // constant data: p is unidentifiable
    fit.a = 0.0;
    fit.p = 1.0;
    fit.b = values.front();
    fit.degenerate = true;
    return fit;
  }

  // initialization
  double b0 = tail;
  double a0 = head - tail;
  double p0 = 0.98;
  for (std::size_t i = 1; i < n; ++i) {
    double r_num = values[i] - b0, r_den = values[0] - b0;
    if (r_num * r_den > 0.0 && std::abs(r_den) > 1e-12 && lengths[i] > lengths[0]) {
      double ratio = r_num / r_den;
      if (ratio > 1e-12 && ratio < 1.0) {
        p0 = std::pow(ratio, 1.0 / (lengths[i] - lengths[0]));
        break;
      }
    }
  }
  p0 = std::min(std::max(p0, 1e-6), 0.999999);

  Eigen::Vector3d x(a0, p0, b0);
  double lambda = 1e-3;
  auto ssr_of = [&](const Eigen::Vector3d& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = v(0) * std::pow(v(1), lengths[i]) + v(2);
      s += (m - values[i]) * (m - values[i]);
    }
    return s;
  };
  double ssr = ssr_of(x);

  Eigen::Matrix3d jtj_final = Eigen::Matrix3d::Zero();
  for (int it = 0; it < 300; ++it) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      double pl = std::pow(x(1), lengths[i]);
      double r = x(0) * pl + x(2) - values[i];
      Eigen::Vector3d j(pl, x(0) * lengths[i] * (lengths[i] > 0 ? pl / x(1) : 0.0), 1.0);
      jtj += j * j.transpose();
      jtr += j * r;
    }
    jtj_final = jtj;
    Eigen::Matrix3d damped = jtj;
    for (int k = 0; k < 3; ++k) damped(k, k) += lambda * std::max(jtj(k, k), 1e-12);
    Eigen::Vector3d step = damped.ldlt().solve(-jtr);
    if (!step.allFinite()) throw FitError("singular system in decay fit");
    Eigen::Vector3d x_new = x + step;
    x_new(1) = std::min(std::max(x_new(1), 1e-9), 1.0 + 1e-9);
    double ssr_new = ssr_of(x_new);
    if (ssr_new < ssr) {
      double gain = ssr - ssr_new;
      x = x_new;
      ssr = ssr_new;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (gain < 1e-30 && step.norm() < 1e-14) break;
    } else {
      lambda *= 3.0;
      if (lambda > 1e12) break;
    }
  }

  if (!(x(1) > 0.0 && x(1) <= 1.0 + 1e-9)) throw FitError("fitted p outside (0, 1]");
  fit.a = x(0);
  fit.p = std::min(x(1), 1.0);
  fit.b = x(2);
  fit.residual = ssr;

  // covariance = sigma^2 (J^T J)^-1 with sigma^2 = SSR / (n - 3)
  double dof = static_cast<double>(n) - 3.0;
  double sigma2 = dof > 0 ? ssr / dof : 0.0;
  Eigen::Matrix3d cov = jtj_final.inverse() * sigma2;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) fit.covariance[r][c] = cov(r, c);
  return fit;
}

}  // namespace dcg
