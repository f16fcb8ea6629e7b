#pragma once

#include "core/envelope.hpp"
#include "core/qubit_model.hpp"

namespace dcg {

/// Simulated fine-amplitude calibration: find the scale factor on the
/// envelope such that the ground-state population after (X_pi/2)^n_max from
/// |0> equals 1/2. n_max must be odd and >= 3. Bisection on a bracket around
/// 1; CalibrationError if no root is bracketed.
double calibrate_amplitude(const Envelope& env, const QubitModel& model, int n_max = 9);

enum class DragCriterion {
  phase_error,  // Appendix-style: <sigma_x> = 0 after (X_pi/2 X_-pi/2)^n from (|0>-i|1>)/sqrt(2)
  fidelity,     // maximize 3-level average gate fidelity
};

/// Simulated DRAG-weight calibration on a 3-level model; golden-section
/// search for the beta (ns) that minimizes the chosen criterion.
double calibrate_drag_weight(const Envelope& env, const QubitModel& model,
                             DragCriterion criterion = DragCriterion::phase_error,
                             double beta_min = -1.5, double beta_max = 1.5);

/// <sigma_x> after (X_pi/2 X_-pi/2)^n from (|0>-i|1|)/sqrt(2) with the given
/// DRAG weight (the raw observable behind the phase_error criterion).
double drag_phase_observable(const Envelope& env, const QubitModel& model, double beta_ns, int n);

/// Ground-state population after (scale * env)^n from |0>.
double amplitude_observable(const Envelope& env, const QubitModel& model, double scale, int n);

}  // namespace dcg
