#pragma once

#include <string>

#include "core/types.hpp"

namespace dcg {

/// Rotating-frame transmon model. Angular quantities in rad/ns, times in ns.
/// `detuning` is the drive-qubit detuning xi; `thermal_excitation` is the
/// zero-drive steady-state excited-state population.
struct QubitModel {
  int levels = 2;                   // 2 or 3
  double anharmonicity = 0.0;       // rad/ns, negative for a transmon; unused for levels=2
  double t1_ns = 0.0;               // 0 disables relaxation
  double t2_ns = 0.0;               // echo T2; 0 disables dephasing
  double thermal_excitation = 0.0;  // population in [0,1]
  double detuning = 0.0;            // rad/ns

  bool has_decoherence() const { return t1_ns > 0.0 || t2_ns > 0.0; }

  QubitModel with_detuning(double xi) const {
    QubitModel m = *this;
    m.detuning = xi;
    return m;
  }
  QubitModel with_levels(int n) const {
    QubitModel m = *this;
    m.levels = n;
    return m;
  }
  QubitModel without_decoherence() const {
    QubitModel m = *this;
    m.t1_ns = m.t2_ns = 0.0;
    m.thermal_excitation = 0.0;
    return m;
  }

  /// throws ModelError on levels outside {2,3}, T2 > 2 T1, or bad populations
  void validate() const;
};

/// Target-spectator pair under a static ZZ coupling of strength zz (rad/ns).
struct PairModel {
  QubitModel target;
  QubitModel spectator;
  double zz = 0.0;  // xi_ZZ, rad/ns
};

/// Device presets ("Q0", "Q1"); frequencies are rotating-frame metadata and
/// do not enter the dynamics. Throws ConfigError for unknown names.
QubitModel preset_qubit(const std::string& name);

/// "Q0Q1": Q0 target, Q1 spectator, xi_ZZ/2pi = -0.73 MHz.
PairModel preset_pair(const std::string& name);

}  // namespace dcg
