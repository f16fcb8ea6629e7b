#pragma once

#include <cstdint>
#include <vector>

#include "core/envelope.hpp"
#include "core/types.hpp"

namespace dcg {

/// Polynomial-times-cosine-squared drive shape,
///
///   Omega_x(t) = sum_n a_n (t - T/2)^n cos^2(pi (t - T/2) / T),  0 <= t <= T,
///
/// which vanishes with zero slope at both ends. Coefficient a_n carries units
/// rad/ns^(n+1); under a time rescale t -> t/u the coefficients transform as
/// a_n -> a_n u^(n+1) (used to pin down externally quoted parameter sets).
struct AnsatzParams {
  std::vector<double> coeff;  // index = polynomial degree n
  double duration_ns = 40.0;
  std::vector<std::uint8_t> free_mask;  // optimizer dof; empty = default (a1 pinned to 0)

  double coeff_or_zero(std::size_t n) const { return n < coeff.size() ? coeff[n] : 0.0; }

  /// default mask: every degree free except n = 1 (time-symmetric waveform)
  std::vector<std::uint8_t> effective_mask() const;
};

/// Omega_x at time t (rad/ns); zero outside [0, T].
double ansatz_value(const AnsatzParams& p, double t);

/// d Omega_x / dt at time t.
double ansatz_derivative(const AnsatzParams& p, double t);

/// Cumulative rotation angle Theta(t) = int_0^t Omega_x, by exact closed-form
/// antiderivatives of s^n cos^2(pi s / T). Throws ConfigError outside [0, T].
double theta(const AnsatzParams& p, double t);

/// Theta(T) evaluated by the same midpoint quadrature the propagator and the
/// cost functions use (64 cells per ns unless dt says otherwise). Agrees with
/// theta(p, T) to ~1e-12 relative; the optimizer minimizes this one so the
/// synthesized pulse is exact on the simulation grid.
double theta_total_grid(const AnsatzParams& p, double dt_ns = kDefaultDtNs);

/// Midpoint-sampled real envelope; dt must divide T (GridError otherwise).
Envelope ansatz_envelope(const AnsatzParams& p, double dt_ns = kDefaultDtNs);

/// Theta at each midpoint sample, closed form, as one vector (grid helper for
/// the Magnus integrals).
std::vector<double> theta_midpoints(const AnsatzParams& p, double dt_ns = kDefaultDtNs);

/// exact dTheta(T)/da_n = int_0^T (t-T/2)^n cos^2(...) dt (polynomial moments)
double theta_total_gradient(const AnsatzParams& p, std::size_t n);

}  // namespace dcg
