#include "core/ansatz.hpp"

#include <cmath>

namespace dcg {

namespace {

// commensurability guard shared by the sampled constructors
std::size_t step_count(double duration, double dt) {
  if (dt <= 0.0 || duration <= 0.0) throw GridError("duration and dt must be positive");
  double ratio = duration / dt;
  double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw GridError("duration is not an integer multiple of dt");
  return static_cast<std::size_t>(rounded);
}

// int s^n cos(k s) ds via the standard two-term recursion
double cos_moment(int n, double s, double k) {
  if (n == 0) return std::sin(k * s) / k;
  if (n == 1) return s * std::sin(k * s) / k + std::cos(k * s) / (k * k);
  return std::pow(s, n) * std::sin(k * s) / k +
         n * std::pow(s, n - 1) * std::cos(k * s) / (k * k) -
         n * (n - 1) / (k * k) * cos_moment(n - 2, s, k);
}

// antiderivative of s^n cos^2(pi s / T), evaluated at s
double cos2_antiderivative(int n, double s, double T) {
  double k = kTwoPi / T;
  double power_term = std::pow(s, n + 1) / (n + 1);
  return 0.5 * power_term + 0.5 * cos_moment(n, s, k);
}

}  // namespace

std::vector<std::uint8_t> AnsatzParams::effective_mask() const {
  if (!free_mask.empty()) return free_mask;
  std::vector<std::uint8_t> m(coeff.size(), 1);
  if (m.size() > 1) m[1] = 0;
  return m;
}

double ansatz_value(const AnsatzParams& p, double t) {
  const double T = p.duration_ns;
  if (t < 0.0 || t > T) return 0.0;
  double s = t - T / 2.0;
  double c = std::cos(kPi * s / T);
  double poly = 0.0;
  for (std::size_t n = p.coeff.size(); n-- > 0;) poly = poly * s + p.coeff[n];
  return poly * c * c;
}

double ansatz_derivative(const AnsatzParams& p, double t) {
  const double T = p.duration_ns;
  if (t < 0.0 || t > T) return 0.0;
  double s = t - T / 2.0;
  double arg = kPi * s / T;
  double c = std::cos(arg), si = std::sin(arg);
  double poly = 0.0, dpoly = 0.0;
  for (std::size_t n = p.coeff.size(); n-- > 0;) {
    dpoly = dpoly * s + poly;
    poly = poly * s + p.coeff[n];
  }
  return dpoly * c * c - poly * 2.0 * c * si * kPi / T;
}

double theta(const AnsatzParams& p, double t) {
  const double T = p.duration_ns;
  if (t < -1e-12 || t > T + 1e-12) throw ConfigError("theta: t outside [0, T]");
  t = std::min(std::max(t, 0.0), T);
  double s = t - T / 2.0;
  double acc = 0.0;
  for (std::size_t n = 0; n < p.coeff.size(); ++n) {
    if (p.coeff[n] == 0.0) continue;
    acc += p.coeff[n] *
           (cos2_antiderivative(static_cast<int>(n), s, T) -
            cos2_antiderivative(static_cast<int>(n), -T / 2.0, T));
  }
  return acc;
}

double theta_total_grid(const AnsatzParams& p, double dt_ns) {
  std::size_t n = step_count(p.duration_ns, dt_ns);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += ansatz_value(p, (static_cast<double>(i) + 0.5) * dt_ns);
  return acc * dt_ns;
}

Envelope ansatz_envelope(const AnsatzParams& p, double dt_ns) {
  std::size_t n = step_count(p.duration_ns, dt_ns);
  Envelope env;
  env.dt_ns = dt_ns;
  env.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    env.samples[i] = Complex(ansatz_value(p, (static_cast<double>(i) + 0.5) * dt_ns), 0.0);
  return env;
}

std::vector<double> theta_midpoints(const AnsatzParams& p, double dt_ns) {
  std::size_t n = step_count(p.duration_ns, dt_ns);
  std::vector<double> th(n);
  for (std::size_t i = 0; i < n; ++i) th[i] = theta(p, (static_cast<double>(i) + 0.5) * dt_ns);
  return th;
}

double theta_total_gradient(const AnsatzParams& p, std::size_t n) {
  const double T = p.duration_ns;
  return cos2_antiderivative(static_cast<int>(n), T / 2.0, T) -
         cos2_antiderivative(static_cast<int>(n), -T / 2.0, T);
}

}  // namespace dcg
