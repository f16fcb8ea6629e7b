#include "core/optimize.hpp"

#include <cmath>

namespace dcg {

namespace {

// Theta(t_mid) and the grid area are linear in the coefficients; precomputing
// the per-degree basis makes one cost evaluation two fmas and two trig calls
// per grid cell.
struct CostBasis {
  std::vector<std::vector<double>> theta_basis;  // [degree][cell]
  std::vector<double> area_basis;                // [degree]
  double duration_ns;
  std::size_t cells;

  CostBasis(double duration, std::size_t degree_count, double dt) : duration_ns(duration) {
    cells = static_cast<std::size_t>(std::llround(duration / dt));
    theta_basis.assign(degree_count, std::vector<double>(cells));
    area_basis.assign(degree_count, 0.0);
    for (std::size_t n = 0; n < degree_count; ++n) {
      AnsatzParams unit;
      unit.duration_ns = duration;
      unit.coeff.assign(n + 1, 0.0);
      unit.coeff[n] = 1.0;
      std::vector<double> th = theta_midpoints(unit, dt);
      theta_basis[n] = th;
      area_basis[n] = theta_total_grid(unit, dt);
    }
  }

  void costs(const std::vector<double>& coeff, double& c_fid, double& c_rob) const {
    double area = 0.0;
    for (std::size_t n = 0; n < coeff.size(); ++n) area += coeff[n] * area_basis[n];
    c_fid = std::abs(area - kPi / 2.0);
    double icos = 0.0, isin = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      double th = 0.0;
      for (std::size_t n = 0; n < coeff.size(); ++n) th += coeff[n] * theta_basis[n][i];
      icos += std::cos(th);
      isin += std::sin(th);
    }
    double dt = duration_ns / static_cast<double>(cells);
    c_rob = (std::abs(icos) + std::abs(isin)) * dt / duration_ns;
  }
};

}  // namespace

OptimizeOptions OptimizeOptions::defaults(double duration_ns, int degree) {
  OptimizeOptions o;
  o.seed.duration_ns = duration_ns;
  o.seed.coeff.assign(degree + 1, 0.0);
  o.seed.coeff[0] = kPi / duration_ns;
  return o;
}

OptimizeResult optimize_pulse(const OptimizeOptions& opts) {
  if (!(opts.weight > 0.0 && opts.weight < 1.0)) throw ConfigError("weight must lie in (0,1)");
  if (opts.seed.coeff.empty()) throw ConfigError("optimizer seed has no coefficients");
  const AnsatzParams& seed = opts.seed;
  std::vector<std::uint8_t> mask = seed.effective_mask();

  std::vector<std::size_t> free_idx;
  for (std::size_t n = 0; n < seed.coeff.size(); ++n)
    if (mask[n]) free_idx.push_back(n);
  if (free_idx.empty()) throw ConfigError("degree mask leaves no free coefficients");

  CostBasis basis(seed.duration_ns, seed.coeff.size(), kDefaultDtNs);
  std::vector<double> full = seed.coeff;

  ScalarFn objective = [&](const std::vector<double>& x) {
    std::vector<double> c = full;
    for (std::size_t k = 0; k < free_idx.size(); ++k) c[free_idx[k]] = x[k];
    double cf, cr;
    basis.costs(c, cf, cr);
    double value = opts.weight * cf + (1.0 - opts.weight) * cr;
    if (!std::isfinite(value)) throw NumericError("cost is not finite");
    return value;
  };

  LbfgsOptions lo;
  lo.history = opts.history_size;
  lo.max_iterations = opts.max_iterations;
  lo.gradient_tol = opts.convergence_tol;
  lo.fd_step = opts.gradient_step;

  std::vector<double> x0(free_idx.size());
  for (std::size_t k = 0; k < free_idx.size(); ++k) x0[k] = seed.coeff[free_idx[k]];

  LbfgsResult lr = lbfgs_minimize(objective, std::move(x0), lo);

  OptimizeResult out;
  out.params = seed;
  for (std::size_t k = 0; k < free_idx.size(); ++k) out.params.coeff[free_idx[k]] = lr.x[k];
  double cf, cr;
  basis.costs(out.params.coeff, cf, cr);
  out.c_fidelity = cf;
  out.c_robust = cr;
  out.c_total = opts.weight * cf + (1.0 - opts.weight) * cr;
  out.iterations = lr.iterations;
  out.gradient_norm = lr.gradient_norm;
  out.converged = lr.converged;
  return out;
}

ScaleResolution resolve_time_scale(double a0, double a2, double s_min, double s_max) {
  auto objective = [&](double s) {
    AnsatzParams p;
    p.duration_ns = s;
    p.coeff = {a0, 0.0, a2};
    // grid density comparable to 64/ns at the physical duration
    std::size_t n = std::max<std::size_t>(512, static_cast<std::size_t>(64.0 * s));
    double dt = s / static_cast<double>(n);
    double cf = std::abs(theta_total_grid(p, dt) - kPi / 2.0);
    std::vector<double> th = theta_midpoints(p, dt);
    double icos = 0.0, isin = 0.0;
    for (double t : th) {
      icos += std::cos(t);
      isin += std::sin(t);
    }
    return cf + (std::abs(icos) + std::abs(isin)) * dt / s;
  };

  double best_s = s_min, best_v = objective(s_min);
  for (double s = s_min; s <= s_max; s += 0.01) {
    double v = objective(s);
    if (v < best_v) {
      best_v = v;
      best_s = s;
    }
  }
  // golden-section polish around the coarse minimum
  double lo = std::max(s_min, best_s - 0.02), hi = std::min(s_max, best_s + 0.02);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = objective(c), fd = objective(d);
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = objective(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = objective(d);
    }
  }
  ScaleResolution r;
  r.scale = 0.5 * (lo + hi);
  r.residual = objective(r.scale);
  return r;
}

std::vector<double> to_normalized(const AnsatzParams& p, double scale) {
  double u = p.duration_ns / scale;
  std::vector<double> out(p.coeff.size());
  for (std::size_t n = 0; n < p.coeff.size(); ++n)
    out[n] = p.coeff[n] * std::pow(u, static_cast<double>(n + 1));
  return out;
}

AnsatzParams from_normalized(const std::vector<double>& coeff, double scale, double duration_ns) {
  AnsatzParams p;
  p.duration_ns = duration_ns;
  double u = duration_ns / scale;
  p.coeff.resize(coeff.size());
  for (std::size_t n = 0; n < coeff.size(); ++n)
    p.coeff[n] = coeff[n] / std::pow(u, static_cast<double>(n + 1));
  return p;
}

}  // namespace dcg
