#pragma once

#include <vector>

#include "core/calibrate.hpp"
#include "core/rb.hpp"

namespace dcg {

struct SweepPoint {
  double detuning = 0.0;  // rad/ns
  double epg_nodecoherence = 0.0;
  double epg_decoherence = 0.0;  // NaN when the column is disabled
};

/// EPG-versus-detuning curve from direct channel infidelity (fast path).
/// The no-decoherence column propagates the calibrated pulse unitarily on the
/// model's level structure; the decoherence column integrates the master
/// equation on the same model.
std::vector<SweepPoint> detuning_sweep(const GateImplementation& gate,
                                       const std::vector<double>& detunings,
                                       const QubitModel& model, bool with_decoherence_column,
                                       bool with_thermal = true);

/// Slow path: full simulated interleaved RB per detuning (detuning applied
/// only to the interleaved gates; reference Cliffords stay on resonance).
std::vector<SweepPoint> detuning_sweep_irb(const GateImplementation& gate,
                                           const std::vector<double>& detunings,
                                           const QubitModel& model, bool with_decoherence,
                                           const std::vector<int>& lengths, int n_sequences,
                                           std::uint64_t seed);

/// log-log slope of infidelity vs detuning from a least-squares line fit
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---- simulated calibration protocol transcripts ----

enum class CalProtocol { amplitude_rough, drag_weight, amplitude_fine };

struct CalRow {
  double sweep_value;
  int n;
  double observable;
};

struct CalTranscript {
  CalProtocol protocol;
  std::vector<CalRow> rows;
  double calibrated_value = 0.0;
};

/// Sweep transcript of (value, n, observable) triples. Observables: ground
/// population for the amplitude protocols, <sigma_x> for the DRAG protocol.
/// The calibrated value is the crossing (amplitude: P0 = 1/2 at the largest
/// n; drag: <sigma_x> = 0); CalibrationError if the grid brackets no crossing.
CalTranscript simulate_calibration_protocol(const Envelope& env, const QubitModel& model,
                                            CalProtocol protocol,
                                            const std::vector<double>& sweep_values,
                                            const std::vector<int>& n_list);

}  // namespace dcg
