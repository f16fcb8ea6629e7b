#include "core/propagate.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace dcg {

namespace {

std::size_t checked_steps(double duration, double dt) {
  if (duration <= 0.0 || dt <= 0.0) throw GridError("duration and dt must be positive");
  double ratio = duration / dt;
  double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw GridError("duration is not an integer multiple of dt");
  return static_cast<std::size_t>(rounded);
}

}  // namespace

Mat expm_herm(const Mat& h, double tau) {
  if (!h.allFinite()) throw NumericError("non-finite Hamiltonian entries");
  if (h.rows() == 2) {
    // H = c0 I + v . sigma with v real; exp(-iH tau) in closed form
    double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    double vx = h(0, 1).real();
    double vy = -h(0, 1).imag();
    double vn = std::sqrt(vx * vx + vy * vy + vz * vz);
    double c = std::cos(vn * tau), s = (vn > 0.0) ? std::sin(vn * tau) / vn : tau;
    Complex phase = std::polar(1.0, -c0 * tau);
    Mat u(2, 2);
    u(0, 0) = phase * Complex(c, -s * vz);
    u(1, 1) = phase * Complex(c, s * vz);
    u(0, 1) = phase * Complex(-s * vy, -s * vx);
    u(1, 0) = phase * Complex(s * vy, -s * vx);
    return u;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases = (Complex(0, -tau) * es.eigenvalues().cast<Complex>().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat drive_hamiltonian(Complex env, const QubitModel& model) {
  if (model.levels == 2) {
    Mat h(2, 2);
    h(0, 0) = 0.5 * model.detuning;
    h(1, 1) = -0.5 * model.detuning;
    h(0, 1) = 0.5 * Complex(env.real(), -env.imag());
    h(1, 0) = std::conj(h(0, 1));
    return h;
  }
  if (model.levels == 3) {
    Mat h = Mat::Zero(3, 3);
    h(1, 1) = model.detuning;
    h(2, 2) = 2.0 * model.detuning + model.anharmonicity;
    Complex half = 0.5 * Complex(env.real(), -env.imag());
    h(0, 1) = half;
    h(1, 0) = std::conj(half);
    h(1, 2) = std::sqrt(2.0) * half;
    h(2, 1) = std::conj(h(1, 2));
    return h;
  }
  throw ModelError("drive_hamiltonian supports 2 or 3 levels");
}

Mat propagate_piecewise(const std::function<Mat(double)>& hamiltonian_at, double duration_ns,
                        double dt_ns) {
  std::size_t n = checked_steps(duration_ns, dt_ns);
  Mat u;
  for (std::size_t i = 0; i < n; ++i) {
    double t_mid = (static_cast<double>(i) + 0.5) * dt_ns;
    Mat step = expm_herm(hamiltonian_at(t_mid), dt_ns);
    u = (i == 0) ? step : Mat(step * u);
  }
  if (!u.allFinite()) throw NumericError("propagator diverged");
  return u;
}

Mat propagate_envelope(const Envelope& env, const QubitModel& model) {
  model.validate();
  Mat u = Mat::Identity(model.levels, model.levels);
  for (const Complex& s : env.samples) u = expm_herm(drive_hamiltonian(s, model), env.dt_ns) * u;
  if (!u.allFinite()) throw NumericError("propagator diverged");
  return u;
}

Mat x_rotation(double theta, int dim) {
  Mat u = Mat::Identity(dim, dim);
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  u(0, 0) = c;
  u(1, 1) = c;
  u(0, 1) = Complex(0, -s);
  u(1, 0) = Complex(0, -s);
  return u;
}

Mat virtual_z(double phi, int dim) {
  Mat u = Mat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) u(j, j) = std::polar(1.0, phi * j);
  return u;
}

Mat propagate_pair(const Envelope& env, const PairModel& pair,
                   const std::vector<FlipEvent>& flips, double drive_reference_shift) {
  pair.target.validate();
  const int dt_dim = pair.target.levels;
  const int dim = dt_dim * 2;
  const double dt = env.dt_ns;

  // sigma_z on the computational block of the target, zero on leakage levels
  Mat sz0 = Mat::Zero(dt_dim, dt_dim);
  sz0(0, 0) = 1.0;
  sz0(1, 1) = -1.0;
  Mat id2 = Mat::Identity(2, 2);
  Mat zz = 0.5 * pair.zz * kron(sz0, pauli_z()) - 0.5 * drive_reference_shift * kron(sz0, id2);

  Mat flip_op = kron(Mat::Identity(dt_dim, dt_dim), pauli_x());

  // sorted copy; events apply at their timestamps between piecewise segments
  std::vector<FlipEvent> events = flips;
  std::sort(events.begin(), events.end(),
            [](const FlipEvent& a, const FlipEvent& b) { return a.time_ns < b.time_ns; });
  // an event inside the pulse is only legal where the drive is zero
  const double duration = env.duration_ns();
  for (const FlipEvent& ev : events) {
    if (ev.time_ns <= 1e-12 || ev.time_ns >= duration - 1e-12) continue;
    auto cell = [&](double t) {
      auto j = static_cast<std::size_t>(std::max(0.0, std::floor(t / dt)));
      return std::min(j, env.samples.size() - 1);
    };
    if (std::abs(env.samples[cell(ev.time_ns - 1e-9)]) > 0.0 ||
        std::abs(env.samples[cell(ev.time_ns + 1e-9)]) > 0.0)
      throw SequencingError("spectator flip scheduled inside a drive segment");
  }
  std::size_t next_event = 0;

  Mat u = Mat::Identity(dim, dim);
  auto apply_events_through = [&](double t) {
    while (next_event < events.size() && events[next_event].time_ns <= t + 1e-12) {
      if (events[next_event].flip) u = flip_op * u;
      ++next_event;
    }
  };

  apply_events_through(0.0);
  for (std::size_t i = 0; i < env.samples.size(); ++i) {
    const double cell_start = static_cast<double>(i) * dt;
    const double cell_end = cell_start + dt;
    Mat h = kron(drive_hamiltonian(env.samples[i], pair.target), id2) + zz;
    double t = cell_start;
    while (next_event < events.size() && events[next_event].time_ns < cell_end - 1e-12) {
      double te = events[next_event].time_ns;
      if (te > t + 1e-12) u = expm_herm(h, te - t) * u;
      if (events[next_event].flip) u = flip_op * u;
      ++next_event;
      t = te;
    }
    u = expm_herm(h, cell_end - t) * u;
    apply_events_through(cell_end);
  }
  // boundary events at or beyond the envelope's end
  while (next_event < events.size()) {
    if (events[next_event].flip) u = flip_op * u;
    ++next_event;
  }
  return u;
}

}  // namespace dcg
