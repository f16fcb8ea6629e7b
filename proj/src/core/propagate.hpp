#pragma once

#include <functional>
#include <vector>

#include "core/envelope.hpp"
#include "core/qubit_model.hpp"
#include "core/types.hpp"

namespace dcg {

/// exp(-i H tau) for Hermitian H. 2x2 uses the exact axis-angle form; larger
/// dimensions go through a self-adjoint eigendecomposition. Unitary to
/// machine precision either way.
Mat expm_herm(const Mat& h, double tau);

/// Rotating-frame drive Hamiltonian for one envelope sample (rad/ns).
/// levels=2: Re(env) sx/2 + Im(env) sy/2 + xi sz/2.
/// levels=3: same drive with sqrt(2)-weighted 1<->2 coupling and diagonal
/// (0, xi, 2 xi + alpha).
Mat drive_hamiltonian(Complex envelope_sample, const QubitModel& model);

/// Time-ordered product of midpoint-sampled piecewise-constant exponentials.
/// duration/dt must be an integer (GridError); non-finite entries raise
/// NumericError.
Mat propagate_piecewise(const std::function<Mat(double)>& hamiltonian_at, double duration_ns,
                        double dt_ns);

/// Propagator of a sampled envelope on the model (unitary, levels x levels).
Mat propagate_envelope(const Envelope& env, const QubitModel& model);

/// X_theta on the computational subspace of a d-level space, exp(-i theta sx/2).
Mat x_rotation(double theta, int dim = 2);

/// Virtual Z: diag(1, e^{i phi}, e^{2 i phi}, ...), exact and instantaneous.
Mat virtual_z(double phi, int dim = 2);

/// Instantaneous spectator flip event for propagate_pair.
struct FlipEvent {
  double time_ns = 0.0;
  bool flip = true;
};

/// Joint propagator on target (x) spectator with the static ZZ term always on
/// and ideal instantaneous spectator X_pi flips between drive segments.
/// drive_reference_shift subtracts a fixed sigma_z0/2 term (drive frequency
/// referenced away from the bare qubit); zero keeps chi = +-zz per spectator
/// state. Flip events inside a nonzero drive sample raise SequencingError.
Mat propagate_pair(const Envelope& target_envelope, const PairModel& pair,
                   const std::vector<FlipEvent>& spectator_flips,
                   double drive_reference_shift = 0.0);

}  // namespace dcg
