#include "core/rb.hpp"

#include <algorithm>
#include <cmath>

#include "core/metrics.hpp"
#include "core/parallel.hpp"
#include "core/propagate.hpp"
#include "core/rng.hpp"
#include "core/shapes.hpp"

namespace dcg {

const char* rb_mode_name(RBMode m) {
  switch (m) {
    case RBMode::standard: return "standard";
    case RBMode::interleaved: return "interleaved";
    case RBMode::leakage: return "leakage";
    case RBMode::spectator: return "spectator";
  }
  return "?";
}

Envelope GateImplementation::calibrated() const {
  Envelope e = envelope;
  if (drag_beta_ns != 0.0) e = drag_augment(e, drag_beta_ns);
  if (amplitude_scale != 1.0) e = e.scaled(amplitude_scale);
  return e;
}

std::vector<int> RBConfig::default_lengths() { return {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}; }
std::vector<int> RBConfig::default_spectator_lengths() {
  return {1, 2, 4, 8, 16, 32, 43, 64, 128, 256};
}

void RBConfig::validate() const {
  if (lengths.empty()) throw ConfigError("rb lengths must not be empty");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw ConfigError("rb lengths must be >= 1");
    if (i > 0 && lengths[i] <= lengths[i - 1])
      throw ConfigError("rb lengths must be strictly increasing");
  }
  if (n_sequences < 1) throw ConfigError("need at least one sequence");
  if (mode == RBMode::leakage && model.levels < 3)
    throw ConfigError("leakage RB needs a 3-level model");
  if (shots < 0 || readout_error < 0.0 || readout_error > 0.5)
    throw ConfigError("bad shots/readout configuration");
}

RBSequence rb_sequence(std::uint64_t seed, int length, int index, bool interleaved_x90) {
  Rng rng = Rng::for_sequence(seed, static_cast<std::uint64_t>(length),
                              static_cast<std::uint64_t>(index));
  RBSequence s;
  s.cliffords.resize(length);
  int acc = clifford_identity_index();
  const int x90 = clifford_x90_index();
  for (int i = 0; i < length; ++i) {
    int c = static_cast<int>(rng.next_below(24));
    s.cliffords[i] = c;
    acc = clifford_compose(acc, c);
    if (interleaved_x90) acc = clifford_compose(acc, x90);
  }
  s.recovery = clifford_inverse(acc);
  return s;
}

namespace {

// density-matrix channel bundle used by the per-sequence engine
struct Channels {
  // X90 channel per spectator state (index 0 when no spectator)
  std::vector<GateChannel> x90;
  std::vector<GateChannel> x90_interleaved;  // possibly detuned
  std::vector<Mat> vz_quarter;               // virtual Z(pi/2 * k), k = 0..3
  int dim = 2;
  bool inject = false;
  double inject_q = 0.0;  // rho -> (1-q) rho + q I/d on the computational block
};

Mat apply_vz(const Channels& ch, const Mat& rho, double angle) {
  // angles are multiples of pi/2 by construction of the table
  int k = static_cast<int>(std::llround(angle / (kPi / 2.0))) & 3;
  const Mat& u = ch.vz_quarter[k];
  return u * rho * u.adjoint();
}

Mat apply_depolarizing(const Mat& rho, double q) {
  // computational-block depolarizing; leaves any leakage population alone
  Mat out = rho * (1.0 - q);
  Complex tr_cc = rho(0, 0) + rho(1, 1);
  out(0, 0) += q * 0.5 * tr_cc;
  out(1, 1) += q * 0.5 * tr_cc;
  return out;
}

struct ArmOutput {
  std::vector<std::vector<double>> survival;  // [length][sequence]
  std::vector<std::vector<double>> leak;      // level-2 population
};

// simulate one RB arm (reference or interleaved) across all lengths/sequences
ArmOutput run_arm(const RBConfig& cfg, const Channels& ch, bool interleaved, bool flips_enabled,
                  std::uint64_t seed_salt) {
  const int dim = ch.dim;
  const std::size_t n_len = cfg.lengths.size();
  ArmOutput out;
  out.survival.assign(n_len, std::vector<double>(cfg.n_sequences, 0.0));
  out.leak.assign(n_len, std::vector<double>(cfg.n_sequences, 0.0));

  std::vector<std::pair<std::size_t, int>> work;
  for (std::size_t li = 0; li < n_len; ++li)
    for (int s = 0; s < cfg.n_sequences; ++s) work.emplace_back(li, s);

  parallel_for(work.size(), [&](std::size_t w) {
    const auto [li, sidx] = work[w];
    const int length = cfg.lengths[li];
    RBSequence seq = rb_sequence(cfg.seed + seed_salt, length, sidx, interleaved);
    // spectator flip coin stream is separate from the Clifford stream
    Rng flip_rng = Rng::for_sequence(cfg.seed + seed_salt, length, sidx, /*salt=*/0xF11F);

    Mat rho = Mat::Zero(dim, dim);
    rho(0, 0) = 1.0;
    int spect = 0;  // spectator state index into ch.x90

    auto apply_clifford = [&](int index, bool count_interleave) {
      const CliffordGate& g = clifford_table()[index];
      const GateChannel& pulse = ch.x90[spect];
      rho = apply_vz(ch, rho, g.z_angles[0]);
      rho = pulse.apply(rho);
      rho = apply_vz(ch, rho, g.z_angles[1]);
      rho = pulse.apply(rho);
      rho = apply_vz(ch, rho, g.z_angles[2]);
      if (ch.inject) rho = apply_depolarizing(rho, ch.inject_q);
      if (count_interleave) {
        rho = ch.x90_interleaved[spect].apply(rho);
      }
    };

    for (int i = 0; i < length; ++i) {
      if (flips_enabled && flip_rng.next_bool()) spect ^= 1;
      apply_clifford(seq.cliffords[i], interleaved);
    }
    apply_clifford(seq.recovery, false);

    double survival = rho(0, 0).real();
    double leak = dim >= 3 ? rho(2, 2).real() : 0.0;
    if (cfg.readout_error > 0.0)
      survival = (1.0 - cfg.readout_error) * survival + cfg.readout_error * (1.0 - survival);
    if (cfg.shots > 0) {
      Rng shot_rng = Rng::for_sequence(cfg.seed + seed_salt, length, sidx, /*salt=*/0x5407);
      survival = static_cast<double>(shot_rng.next_binomial(
                     cfg.shots, std::min(std::max(survival, 0.0), 1.0))) /
                 cfg.shots;
    }
    out.survival[li][sidx] = survival;
    out.leak[li][sidx] = leak;
  });
  return out;
}

GateChannel build_x90_channel(const RBConfig& cfg, const QubitModel& model) {
  Envelope env = cfg.gate.calibrated();
  if (cfg.with_decoherence && model.has_decoherence())
    return lindblad_propagate(env, model, cfg.with_thermal);
  return GateChannel::from_unitary(propagate_envelope(env, model));
}

Channels build_channels(const RBConfig& cfg) {
  Channels ch;
  if (cfg.mode == RBMode::spectator) {
    // target-qubit channels per spectator state; chi = +-zz, drive referenced
    // to the spectator-|0> condition unless disabled
    const double zz = cfg.pair.zz;
    const double ref = cfg.reference_drive_to_spectator0 ? zz : 0.0;
    QubitModel base = cfg.pair.target;
    ch.dim = base.levels;
    for (int s = 0; s < 2; ++s) {
      double chi = (s == 0) ? zz : -zz;
      QubitModel m = base.with_detuning(base.detuning + chi - ref);
      ch.x90.push_back(build_x90_channel(cfg, m));
      ch.x90_interleaved.push_back(ch.x90.back());
    }
  } else {
    QubitModel m = cfg.model;
    ch.dim = m.levels;
    ch.x90.push_back(build_x90_channel(cfg, m));
    if (cfg.mode == RBMode::interleaved && cfg.interleaved_detuning != 0.0) {
      QubitModel md = m.with_detuning(m.detuning + cfg.interleaved_detuning);
      ch.x90_interleaved.push_back(build_x90_channel(cfg, md));
    } else {
      ch.x90_interleaved.push_back(ch.x90.front());
    }
  }
  for (int k = 0; k < 4; ++k) ch.vz_quarter.push_back(virtual_z(k * kPi / 2.0, ch.dim));
  ch.inject = cfg.inject_depolarizing != 0.0;
  ch.inject_q = 2.0 * cfg.inject_depolarizing;  // avg infidelity r -> q = 2r
  return ch;
}

std::vector<double> column_means(const std::vector<std::vector<double>>& v) {
  std::vector<double> m(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (double x : v[i]) m[i] += x;
    if (!v[i].empty()) m[i] /= static_cast<double>(v[i].size());
  }
  return m;
}

}  // namespace

RBResult simulate_rb(const RBConfig& cfg) {
  cfg.validate();
  Channels ch = build_channels(cfg);

  RBResult res;
  res.mode = cfg.mode;
  res.lengths = cfg.lengths;

  const bool interleaved = cfg.mode == RBMode::interleaved || cfg.mode == RBMode::spectator;
  const bool flips = cfg.mode == RBMode::spectator && cfg.spectator_flips;

  ArmOutput main_arm = run_arm(cfg, ch, interleaved, flips, /*seed_salt=*/0);

  std::vector<double> lengths_d(cfg.lengths.begin(), cfg.lengths.end());
  try {
    if (cfg.mode == RBMode::leakage) {
      res.survival_per_seq = main_arm.leak;
      res.survival_mean = column_means(main_arm.leak);
      res.fit = fit_decay(lengths_d, res.survival_mean);
      res.lpg = lpg_from_fit(res.fit);
      res.epg = res.lpg;
    } else {
      res.survival_per_seq = main_arm.survival;
      res.survival_mean = column_means(main_arm.survival);
      res.fit = fit_decay(lengths_d, res.survival_mean);
      if (interleaved) {
        ArmOutput ref_arm = run_arm(cfg, ch, false, flips, /*seed_salt=*/0x9D5A);
        res.fit_reference = fit_decay(lengths_d, column_means(ref_arm.survival));
        res.has_reference = true;
        res.epg = epg_interleaved(res.fit, res.fit_reference);
      } else {
        res.epg = epg_standard(res.fit);
      }
    }
    res.fit_ok = true;
  } catch (const FitError& e) {
    res.fit_ok = false;
    res.fit_message = e.what();
  }
  return res;
}

double epc_from_p(double p) { return (1.0 - p) / 2.0; }
double epg_standard(const DecayFit& fit) { return epc_from_p(fit.p) / 2.0; }
double epg_interleaved(const DecayFit& interleaved, const DecayFit& reference) {
  return (1.0 - interleaved.p / reference.p) / 2.0;
}
double lpg_from_fit(const DecayFit& fit) { return fit.b * (1.0 - fit.p) / 2.0; }

std::vector<HistogramRow> survival_histogram(const RBResult& r, double bin_width) {
  std::vector<HistogramRow> rows;
  for (std::size_t li = 0; li < r.lengths.size(); ++li) {
    std::vector<int> counts(static_cast<std::size_t>(1.0 / bin_width) + 2, 0);
    for (double s : r.survival_per_seq[li]) {
      double clamped = std::min(std::max(s, 0.0), 1.0);
      counts[static_cast<std::size_t>(clamped / bin_width)]++;
    }
    for (std::size_t b = 0; b < counts.size(); ++b)
      if (counts[b] > 0)
        rows.push_back({r.lengths[li], (static_cast<double>(b) + 0.5) * bin_width, counts[b]});
  }
  return rows;
}

double survival_std_at(const RBResult& r, int length) {
  auto it = std::find(r.lengths.begin(), r.lengths.end(), length);
  if (it == r.lengths.end()) throw ConfigError("length not present in RB result");
  const auto& vals = r.survival_per_seq[static_cast<std::size_t>(it - r.lengths.begin())];
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= static_cast<double>(vals.size());
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var /= std::max<double>(1.0, static_cast<double>(vals.size()) - 1.0);
  return std::sqrt(var);
}

}  // namespace dcg
