#include "core/magnus.hpp"

#include <cmath>
#include <vector>

namespace dcg {

namespace {

MagnusReport assemble(const std::vector<double>& theta_mid, double duration_ns, double dt) {
  const std::size_t n = theta_mid.size();
  std::vector<double> cth(n), sth(n);
  for (std::size_t i = 0; i < n; ++i) {
    cth[i] = std::cos(theta_mid[i]);
    sth[i] = std::sin(theta_mid[i]);
  }

  double icos = 0.0, isin = 0.0;
  // D = iint_{t'<t} sin(Theta(t') - Theta(t)) dt' dt via prefix sums; the
  // diagonal half-cells contribute nothing (sin 0)
  double d2 = 0.0, pc = 0.0, ps = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d2 += (cth[i] * ps - sth[i] * pc) * dt;
    pc += cth[i] * dt;
    ps += sth[i] * dt;
    icos += cth[i];
    isin += sth[i];
  }
  icos *= dt;
  isin *= dt;

  MagnusReport r;
  r.duration_ns = duration_ns;
  r.i_cos_ns = icos;
  r.i_sin_ns = isin;
  r.h1 = (icos / duration_ns) * 0.5 * pauli_z() + (isin / duration_ns) * 0.5 * pauli_y();
  r.h2 = (-d2 / (4.0 * duration_ns)) * pauli_x();
  r.c_robust = (std::abs(icos) + std::abs(isin)) / duration_ns;
  return r;
}

}  // namespace

Mat toggling_error_hamiltonian(const AnsatzParams& p, double t) {
  double th = theta(p, t);  // theta() enforces the [0,T] domain
  return std::cos(th) * 0.5 * pauli_z() + std::sin(th) * 0.5 * pauli_y();
}

MagnusReport magnus_from_theta(const std::function<double(double)>& theta_at, double duration_ns,
                               std::size_t n_steps) {
  if (n_steps == 0 || duration_ns <= 0.0) throw ConfigError("bad magnus grid");
  const double dt = duration_ns / static_cast<double>(n_steps);
  std::vector<double> th(n_steps);
  for (std::size_t i = 0; i < n_steps; ++i)
    th[i] = theta_at((static_cast<double>(i) + 0.5) * dt);
  MagnusReport r = assemble(th, duration_ns, dt);
  r.c_fidelity = std::abs(theta_at(duration_ns) - kPi / 2.0);
  return r;
}

MagnusReport magnus_report(const AnsatzParams& p, double dt_ns) {
  std::vector<double> th = theta_midpoints(p, dt_ns);
  MagnusReport r = assemble(th, p.duration_ns, dt_ns);
  r.c_fidelity = std::abs(theta_total_grid(p, dt_ns) - kPi / 2.0);
  return r;
}

double cost_fidelity(const AnsatzParams& p) {
  return std::abs(theta_total_grid(p) - kPi / 2.0);
}

double cost_robust(const AnsatzParams& p) {
  std::vector<double> th = theta_midpoints(p);
  double icos = 0.0, isin = 0.0;
  for (double t : th) {
    icos += std::cos(t);
    isin += std::sin(t);
  }
  icos *= kDefaultDtNs;
  isin *= kDefaultDtNs;
  return (std::abs(icos) + std::abs(isin)) / p.duration_ns;
}

double cost_total(const AnsatzParams& p, double w) {
  if (!(w > 0.0 && w < 1.0)) throw ConfigError("weight must lie in (0,1)");
  return w * cost_fidelity(p) + (1.0 - w) * cost_robust(p);
}

}  // namespace dcg
