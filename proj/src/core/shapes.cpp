#include "core/shapes.hpp"

#include <cmath>

namespace dcg {

Envelope gaussian_envelope(double duration_ns, double sigma_ns, double dt_ns,
                           double target_angle) {
  if (sigma_ns <= 0.0) throw ConfigError("gaussian sigma must be positive");
  if (target_angle == 0.0) throw ConfigError("gaussian target angle of zero cannot be normalized");
  if (dt_ns <= 0.0 || duration_ns <= 0.0) throw GridError("duration and dt must be positive");
  double ratio = duration_ns / dt_ns;
  double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw GridError("duration is not an integer multiple of dt");
  std::size_t n = static_cast<std::size_t>(rounded);

  const double t0 = duration_ns / 2.0;
  const double baseline = std::exp(-t0 * t0 / (2.0 * sigma_ns * sigma_ns));
  Envelope env;
  env.dt_ns = dt_ns;
  env.samples.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double t = (static_cast<double>(i) + 0.5) * dt_ns;
    double v = std::exp(-(t - t0) * (t - t0) / (2.0 * sigma_ns * sigma_ns)) - baseline;
    env.samples[i] = Complex(v, 0.0);
    sum += v;
  }
  double area = sum * dt_ns;
  if (std::abs(area) < 1e-300) throw NumericError("gaussian normalization degenerate");
  return env.scaled(target_angle / area);
}

std::array<double, 3> corpse_angles(double theta, int n1, int n2, int n3) {
  double beta = std::asin(std::sin(theta / 2.0) / 2.0);
  std::array<double, 3> out = {2.0 * n1 * kPi + theta / 2.0 - beta,
                               2.0 * n2 * kPi - 2.0 * beta,
                               2.0 * n3 * kPi + theta / 2.0 - beta};
  for (double a : out)
    if (a <= 0.0) throw ConfigError("corpse winding gives a non-positive segment angle");
  return out;
}

namespace {

// one flat-top raised-cosine segment: rise tr, flat tf, fall tr
struct Segment {
  double rise, flat, peak, sign;
  double duration() const { return 2.0 * rise + flat; }
  // antiderivative of the |shape| at local time x in [0, duration]
  double integral(double x) const {
    x = std::min(std::max(x, 0.0), duration());
    double acc = 0.0;
    if (rise > 0.0) {
      double a = std::min(x, rise);
      acc += peak * 0.5 * (a - rise / kPi * std::sin(kPi * a / rise));
      if (x <= rise) return acc;
    }
    double b = std::min(x - rise, flat);
    if (b > 0.0) acc += peak * b;
    if (x <= rise + flat) return acc;
    if (rise > 0.0) {
      double c = x - rise - flat;  // into the fall
      // mirror of the rise: integral of peak*(1+cos(pi c / rise))/2
      acc += peak * 0.5 * (c + rise / kPi * std::sin(kPi * c / rise));
    }
    return acc;
  }
};

}  // namespace

double corpse_duration_ns(const CorpseSpec& spec) {
  auto angles = corpse_angles(spec.target_angle, spec.n1, spec.n2, spec.n3);
  if (spec.peak <= 0.0) throw ConfigError("corpse peak amplitude must be positive");
  double total = 0.0;
  for (double a : angles) {
    double flat = a / spec.peak - spec.rise_ns;
    if (flat < 0.0) throw ConfigError("corpse peak amplitude too low for the requested rise time");
    total += 2.0 * spec.rise_ns + flat;
  }
  return total;
}

Envelope corpse_envelope(const CorpseSpec& spec, double dt_ns) {
  if (dt_ns <= 0.0) throw GridError("dt must be positive");
  auto angles = corpse_angles(spec.target_angle, spec.n1, spec.n2, spec.n3);
  if (spec.peak <= 0.0) throw ConfigError("corpse peak amplitude must be positive");

  std::array<Segment, 3> segs;
  const double signs[3] = {1.0, -1.0, 1.0};  // phases {0, pi, 0}
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    double flat = angles[i] / spec.peak - spec.rise_ns;
    if (flat < 0.0) throw ConfigError("corpse peak amplitude too low for the requested rise time");
    segs[i] = Segment{spec.rise_ns, flat, spec.peak, signs[i]};
    total += segs[i].duration();
  }

  // signed antiderivative of the concatenated waveform
  auto integral_to = [&](double t) {
    double acc = 0.0, start = 0.0;
    for (const Segment& s : segs) {
      if (t <= start) break;
      acc += s.sign * s.integral(t - start);
      start += s.duration();
    }
    return acc;
  };

  std::size_t n = static_cast<std::size_t>(std::ceil(total / dt_ns - 1e-9));
  Envelope env;
  env.dt_ns = dt_ns;
  env.samples.resize(n);
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double next = integral_to(static_cast<double>(i + 1) * dt_ns);
    env.samples[i] = Complex((next - prev) / dt_ns, 0.0);
    prev = next;
  }
  return env;
}

Envelope drag_augment(const Envelope& env, double beta_ns) {
  if (!env.is_real()) throw ConfigError("drag correction requires a real-valued envelope");
  Envelope out = env;
  const std::size_t n = env.samples.size();
  if (beta_ns == 0.0 || n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    double d;
    if (i == 0)
      d = (env.samples[1].real() - env.samples[0].real()) / env.dt_ns;
    else if (i == n - 1)
      d = (env.samples[n - 1].real() - env.samples[n - 2].real()) / env.dt_ns;
    else
      d = (env.samples[i + 1].real() - env.samples[i - 1].real()) / (2.0 * env.dt_ns);
    out.samples[i] = Complex(env.samples[i].real(), beta_ns * d);
  }
  return out;
}

}  // namespace dcg
