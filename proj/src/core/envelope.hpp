#pragma once

#include <complex>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace dcg {

/// A uniformly sampled complex drive waveform. The real part is the in-phase
/// component Omega_x, the imaginary part the quadrature Omega_y, both in
/// rad/ns. Sample i lives at the midpoint t = (i + 1/2) * dt of its cell,
/// matching the piecewise-constant propagator; outside [0, duration] the
/// envelope is zero.
struct Envelope {
  std::vector<Complex> samples;
  double dt_ns = kDefaultDtNs;

  std::size_t size() const { return samples.size(); }
  double duration_ns() const { return static_cast<double>(samples.size()) * dt_ns; }

  bool is_real() const;

  /// discrete angle integral sum(Re samples) * dt, in rad
  double area() const;

  Envelope scaled(double factor) const;

  double peak_abs() const;
};

/// CSV export, `t_ns,omega_x_rad_per_s,omega_y_rad_per_s`, one row per sample.
void write_envelope_csv(const Envelope& env, const std::string& path);

}  // namespace dcg
