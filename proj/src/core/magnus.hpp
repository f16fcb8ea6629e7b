#pragma once

#include <functional>

#include "core/ansatz.hpp"
#include "core/types.hpp"

namespace dcg {

/// First- and second-order average-Hamiltonian data for the detuning error
/// channel. With Theta(t) the accumulated rotation angle, the toggling-frame
/// error Hamiltonian is xi (cos Theta sz/2 + sin Theta sy/2); h1 and h2 are
/// reported per unit xi and per unit xi^2.
struct MagnusReport {
  double i_cos_ns = 0.0;  // int_0^T cos Theta dt
  double i_sin_ns = 0.0;  // int_0^T sin Theta dt
  Mat h1;                 // (1/T)(i_cos sz/2 + i_sin sy/2)
  Mat h2;                 // -(1/4T) iint sin(Theta' - Theta) sx
  double c_fidelity = 0.0;
  double c_robust = 0.0;
  double duration_ns = 0.0;
};

/// cos Theta(t) sz/2 + sin Theta(t) sy/2 (per unit xi); domain error outside [0,T]
Mat toggling_error_hamiltonian(const AnsatzParams& p, double t);

/// Magnus integrals for an arbitrary angle profile theta(t), composite
/// midpoint on an n_steps grid (the generic path; oracles feed square pulses
/// and friends through here).
MagnusReport magnus_from_theta(const std::function<double(double)>& theta_at, double duration_ns,
                               std::size_t n_steps);

/// Magnus integrals of an ansatz pulse on the 64-per-ns grid (closed-form
/// Theta at the midpoints). Includes the costs.
MagnusReport magnus_report(const AnsatzParams& p, double dt_ns = kDefaultDtNs);

/// |Theta(T) - pi/2| with Theta(T) summed on the simulation grid, so a zero of
/// this cost is exact for the propagator as well.
double cost_fidelity(const AnsatzParams& p);

/// (|I_cos| + |I_sin|) / T -- the L1 size of the first-order average Hamiltonian.
double cost_robust(const AnsatzParams& p);

/// w * C_fidelity + (1 - w) * C_robust; w must lie in (0,1).
double cost_total(const AnsatzParams& p, double w);

}  // namespace dcg
