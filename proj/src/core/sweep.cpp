#include "core/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/metrics.hpp"
#include "core/parallel.hpp"
#include "core/propagate.hpp"
#include "core/shapes.hpp"

namespace dcg {

std::vector<SweepPoint> detuning_sweep(const GateImplementation& gate,
                                       const std::vector<double>& detunings,
                                       const QubitModel& model, bool with_decoherence_column,
                                       bool with_thermal) {
  for (double xi : detunings)
    if (!std::isfinite(xi)) throw ConfigError("non-finite detuning");
  Envelope env = gate.calibrated();
  Mat target = x_rotation(kPi / 2.0, 2);
  std::vector<SweepPoint> out(detunings.size());
  parallel_for(detunings.size(), [&](std::size_t i) {
    QubitModel m = model.with_detuning(model.detuning + detunings[i]);
    SweepPoint p;
    p.detuning = detunings[i];
    Mat u = propagate_envelope(env, m.without_decoherence());
    p.epg_nodecoherence = unitary_infidelity(u, target);
    if (with_decoherence_column && model.has_decoherence()) {
      GateChannel ch = lindblad_propagate(env, m, with_thermal);
      p.epg_decoherence = 1.0 - average_gate_fidelity(ch, target);
    } else {
      p.epg_decoherence = std::numeric_limits<double>::quiet_NaN();
    }
    out[i] = p;
  });
  return out;
}

std::vector<SweepPoint> detuning_sweep_irb(const GateImplementation& gate,
                                           const std::vector<double>& detunings,
                                           const QubitModel& model, bool with_decoherence,
                                           const std::vector<int>& lengths, int n_sequences,
                                           std::uint64_t seed) {
  std::vector<SweepPoint> out(detunings.size());
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    RBConfig cfg;
    cfg.mode = RBMode::interleaved;
    cfg.lengths = lengths;
    cfg.n_sequences = n_sequences;
    cfg.seed = seed;
    cfg.model = model;
    cfg.gate = gate;
    cfg.with_decoherence = with_decoherence;
    cfg.interleaved_detuning = detunings[i];
    RBResult r = simulate_rb(cfg);
    SweepPoint p;
    p.detuning = detunings[i];
    if (with_decoherence) {
      p.epg_decoherence = r.epg;
      p.epg_nodecoherence = std::numeric_limits<double>::quiet_NaN();
    } else {
      p.epg_nodecoherence = r.epg;
      p.epg_decoherence = std::numeric_limits<double>::quiet_NaN();
    }
    out[i] = p;
  }
  return out;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ConfigError("slope fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw NumericError("slope fit needs positive data");
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw NumericError("degenerate slope fit");
  return (n * sxy - sx * sy) / denom;
}

namespace {

double crossing_from_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                          double level) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double f0 = ys[i - 1] - level, f1 = ys[i] - level;
    if (f0 == 0.0) return xs[i - 1];
    if (f0 * f1 < 0.0) return xs[i - 1] + (xs[i] - xs[i - 1]) * f0 / (f0 - f1);
  }
  throw CalibrationError("sweep grid brackets no crossing");
}

}  // namespace

CalTranscript simulate_calibration_protocol(const Envelope& env, const QubitModel& model,
                                            CalProtocol protocol,
                                            const std::vector<double>& sweep_values,
                                            const std::vector<int>& n_list) {
  if (sweep_values.size() < 2) throw ConfigError("calibration sweep needs >= 2 values");
  if (n_list.empty()) throw ConfigError("calibration needs at least one n");
  CalTranscript t;
  t.protocol = protocol;

  const int n_big = *std::max_element(n_list.begin(), n_list.end());
  std::vector<double> ys_big(sweep_values.size());

  for (std::size_t i = 0; i < sweep_values.size(); ++i) {
    for (int n : n_list) {
      double obs;
      switch (protocol) {
        case CalProtocol::amplitude_rough:
          obs = amplitude_observable(env, model, sweep_values[i], 1);
          break;
        case CalProtocol::amplitude_fine:
          obs = amplitude_observable(env, model, sweep_values[i], n);
          break;
        case CalProtocol::drag_weight:
          obs = drag_phase_observable(env, model, sweep_values[i], n);
          break;
      }
      t.rows.push_back({sweep_values[i], n, obs});
      if (n == n_big) ys_big[i] = obs;
    }
  }

  if (protocol == CalProtocol::amplitude_rough) {
    // pick the grid point whose single-pulse ground population is closest to 1/2
    double best = 1e9;
    for (std::size_t i = 0; i < sweep_values.size(); ++i) {
      double d = std::abs(ys_big[i] - 0.5);
      if (d < best) {
        best = d;
        t.calibrated_value = sweep_values[i];
      }
    }
  } else {
    double level = protocol == CalProtocol::amplitude_fine ? 0.5 : 0.0;
    t.calibrated_value = crossing_from_grid(sweep_values, ys_big, level);
  }
  return t;
}

}  // namespace dcg
