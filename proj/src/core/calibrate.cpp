#include "core/calibrate.hpp"

#include <cmath>

#include "core/propagate.hpp"
#include "core/shapes.hpp"

namespace dcg {

double amplitude_observable(const Envelope& env, const QubitModel& model, double scale, int n) {
  Mat u = propagate_envelope(env.scaled(scale), model);
  Vec psi = Vec::Zero(model.levels);
  psi(0) = 1.0;
  for (int k = 0; k < n; ++k) psi = u * psi;
  return std::norm(psi(0));
}

double calibrate_amplitude(const Envelope& env, const QubitModel& model, int n_max) {
  if (n_max < 3 || n_max % 2 == 0) throw ConfigError("n_max must be odd and >= 3");
  auto f = [&](double s) { return amplitude_observable(env, model, s, n_max) - 0.5; };

  // expand a bracket around 1 until the sign changes
  double lo = 0.95, hi = 1.05;
  double flo = f(lo), fhi = f(hi);
  for (int k = 0; k < 6 && flo * fhi > 0.0; ++k) {
    lo = 1.0 - (1.0 - lo) * 2.0;
    hi = 1.0 + (hi - 1.0) * 2.0;
    if (lo <= 0.0) lo = 1e-3;
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0.0) throw CalibrationError("amplitude calibration found no bracket");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (std::abs(hi - lo) < 1e-12) break;
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double drag_phase_observable(const Envelope& env, const QubitModel& model, double beta_ns, int n) {
  Envelope plus = drag_augment(env, beta_ns);
  Envelope minus = plus.scaled(-1.0);  // phase-inverted pulse realizes X_{-pi/2}
  Mat up = propagate_envelope(plus, model);
  Mat um = propagate_envelope(minus, model);
  Vec psi = Vec::Zero(model.levels);
  psi(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
  psi(1) = Complex(0.0, -1.0 / std::sqrt(2.0));
  for (int k = 0; k < n; ++k) psi = um * (up * psi);
  // <sigma_x> on the computational block
  return 2.0 * (std::conj(psi(0)) * psi(1)).real();
}

double calibrate_drag_weight(const Envelope& env, const QubitModel& model,
                             DragCriterion criterion, double beta_min, double beta_max) {
  if (model.levels != 3) throw ModelError("DRAG calibration needs a 3-level model");
  if (!env.is_real()) throw ConfigError("DRAG calibration expects the bare real envelope");

  auto score = [&](double beta) {
    if (criterion == DragCriterion::phase_error) {
      double acc = 0.0;
      for (int n : {1, 2, 3}) {
        double v = drag_phase_observable(env, model, beta, n);
        acc += v * v;
      }
      return acc;
    }
    Envelope dragged = drag_augment(env, beta);
    Mat u = propagate_envelope(dragged, model);
    Mat e = x_rotation(kPi / 2.0, 2).adjoint() * u.block(0, 0, 2, 2);
    double tr = std::abs(e.trace());
    return -(tr * tr + 2.0) / 6.0;
  };

  // golden-section; the score is unimodal in beta over sane brackets
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = beta_min, hi = beta_max;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = score(c), fd = score(d);
  for (int it = 0; it < 120; ++it) {
    if (hi - lo < 1e-10) break;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = score(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = score(d);
    }
  }
  double beta = 0.5 * (lo + hi);
  if (beta_max - beta < 1e-6 * (beta_max - beta_min) ||
      beta - beta_min < 1e-6 * (beta_max - beta_min))
    throw CalibrationError("DRAG search hit the bracket edge");
  return beta;
}

}  // namespace dcg
