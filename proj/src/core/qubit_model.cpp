#include "core/qubit_model.hpp"

namespace dcg {

void QubitModel::validate() const {
  if (levels != 2 && levels != 3) throw ModelError("unsupported level count " + std::to_string(levels));
  if (t1_ns < 0.0 || t2_ns < 0.0) throw ModelError("negative coherence time");
  if (t1_ns > 0.0 && t2_ns > 0.0 && t2_ns > 2.0 * t1_ns + 1e-9)
    throw ModelError("T2 exceeds 2*T1");
  if (thermal_excitation < 0.0 || thermal_excitation > 1.0)
    throw ModelError("thermal excitation outside [0,1]");
}

QubitModel preset_qubit(const std::string& name) {
  QubitModel m;
  if (name == "Q0") {
    m.levels = 3;
    m.anharmonicity = rad_per_ns_from_mhz(-432.0);
    m.t1_ns = 13.2e3;
    m.t2_ns = 10.4e3;
    m.thermal_excitation = 0.055;
  } else if (name == "Q1") {
    m.levels = 3;
    m.anharmonicity = rad_per_ns_from_mhz(-357.0);
    m.t1_ns = 25.3e3;
    m.t2_ns = 15.9e3;
    m.thermal_excitation = 0.087;
  } else {
    throw ConfigError("unknown qubit preset '" + name + "'");
  }
  return m;
}

PairModel preset_pair(const std::string& name) {
  if (name != "Q0Q1") throw ConfigError("unknown pair preset '" + name + "'");
  PairModel p;
  p.target = preset_qubit("Q0").with_levels(2);
  p.spectator = preset_qubit("Q1").with_levels(2);
  p.zz = rad_per_ns_from_mhz(-0.73);
  return p;
}

}  // namespace dcg
