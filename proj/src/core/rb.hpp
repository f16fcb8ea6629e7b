#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/clifford.hpp"
#include "core/decay_fit.hpp"
#include "core/envelope.hpp"
#include "core/lindblad.hpp"
#include "core/qubit_model.hpp"

namespace dcg {

enum class RBMode { standard, interleaved, leakage, spectator };

const char* rb_mode_name(RBMode m);

/// Physical realization of the X_pi/2 pulse: bare envelope plus calibration
/// knobs (DRAG weight and amplitude scale applied at channel-build time).
struct GateImplementation {
  Envelope envelope;
  double drag_beta_ns = 0.0;
  double amplitude_scale = 1.0;

  Envelope calibrated() const;
};

struct RBConfig {
  std::vector<int> lengths;  // strictly increasing, >= 1
  int n_sequences = 40;
  std::uint64_t seed = 1;
  RBMode mode = RBMode::standard;
  QubitModel model;  // target qubit; levels=3 required for leakage mode
  GateImplementation gate;
  bool with_decoherence = false;
  bool with_thermal = true;
  double interleaved_detuning = 0.0;  // applied only to interleaved gates
  int shots = 0;                      // 0 = analytic expectation values
  double readout_error = 0.0;         // symmetric assignment error, off by default
  double inject_depolarizing = 0.0;   // test hook: channel of this avg infidelity per Clifford

  // spectator mode
  PairModel pair;
  bool spectator_flips = true;  // false = plain run, spectator frozen in |0>
  bool reference_drive_to_spectator0 = true;

  void validate() const;
  static std::vector<int> default_lengths();
  static std::vector<int> default_spectator_lengths();  // includes L = 43
};

struct RBResult {
  RBMode mode = RBMode::standard;
  std::vector<int> lengths;
  std::vector<double> survival_mean;                  // leakage mode: level-2 population
  std::vector<std::vector<double>> survival_per_seq;  // [length][sequence]
  DecayFit fit;            // decay of the primary observable
  DecayFit fit_reference;  // reference arm (interleaved and spectator modes)
  bool has_reference = false;
  bool fit_ok = false;
  std::string fit_message;
  double epg = 0.0;  // per-gate error rate for the mode
  double lpg = 0.0;  // leakage mode only
};

/// One RB sequence: random Clifford indices plus the recovery Clifford that
/// inverts the ideal composition (interleaves included when interleaved).
struct RBSequence {
  std::vector<int> cliffords;
  int recovery = 0;
};

/// Deterministic sequence construction; per-sequence stream from
/// hash(seed, length, index).
RBSequence rb_sequence(std::uint64_t seed, int length, int index, bool interleaved_x90);

/// Run the configured experiment. Interleaved and spectator modes run the
/// reference arm internally. Fit failures are reported in the result, not
/// thrown.
RBResult simulate_rb(const RBConfig& config);

/// error-per-Clifford (1-p)/2 for d=2
double epc_from_p(double p);
/// standard RB per-gate rate: per-Clifford / 2 (two physical pulses)
double epg_standard(const DecayFit& fit);
/// interleaved RB per-gate rate (1 - p_int/p_ref)/2; negative results are
/// returned as-is (flagged by the caller, never clamped)
double epg_interleaved(const DecayFit& interleaved, const DecayFit& reference);
/// leakage per gate B(1-p)/2
double lpg_from_fit(const DecayFit& fit);

/// Survival histogram rows (length, bin center, count) for spectator mode.
struct HistogramRow {
  int length;
  double survival;
  int count;
};
std::vector<HistogramRow> survival_histogram(const RBResult& r, double bin_width = 0.01);

/// standard deviation of per-sequence survivals at one length
double survival_std_at(const RBResult& r, int length);

}  // namespace dcg
