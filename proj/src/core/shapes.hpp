#pragma once

#include <array>

#include "core/envelope.hpp"

namespace dcg {

/// Truncated Gaussian centered at T/2, baseline-subtracted so the endpoints
/// are exactly zero, normalized so the discrete area equals target_angle.
/// sigma defaults to T/8 elsewhere; it is always an explicit argument here.
Envelope gaussian_envelope(double duration_ns, double sigma_ns, double dt_ns, double target_angle);

/// Three-segment composite rotation about {+x, -x, +x}.
struct CorpseSpec {
  double target_angle = kPi / 2;   // net rotation theta
  int n1 = 1, n2 = 1, n3 = 1;      // winding numbers
  double rise_ns = 5.0;            // raised-cosine rise and ring-down time
  double peak = 0.0;               // flat-top amplitude, rad/ns
};

/// theta_i = 2 n_i pi +- theta/2 - arcsin(sin(theta/2)/2) (middle segment has
/// no theta/2 term and a doubled arcsin). Throws ConfigError if any angle
/// comes out non-positive.
std::array<double, 3> corpse_angles(double theta, int n1, int n2, int n3);

/// Flat-top raised-cosine realization; segment i carries area theta_i with
/// phase {0, pi, 0} applied as a sign. Samples are exact cell averages, so the
/// discrete segment areas match corpse_angles exactly even when segment
/// boundaries fall between grid points. Flat-top lengths are solved from
/// (area, peak, rise); ConfigError if a segment cannot fit its area.
Envelope corpse_envelope(const CorpseSpec& spec, double dt_ns);

/// total duration implied by the spec (ns), without sampling
double corpse_duration_ns(const CorpseSpec& spec);

/// Y-only derivative correction: Omega_y = beta * dOmega_x/dt via central
/// differences (one-sided at the ends). Input must be real-valued.
Envelope drag_augment(const Envelope& env, double beta_ns);

}  // namespace dcg
