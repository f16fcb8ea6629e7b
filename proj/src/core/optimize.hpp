#pragma once

#include "core/ansatz.hpp"
#include "core/lbfgs.hpp"
#include "core/magnus.hpp"

namespace dcg {

struct OptimizeOptions {
  double weight = 0.999;
  int max_iterations = 4000;
  double gradient_step = 1e-7;
  double convergence_tol = 1e-7;
  int history_size = 10;
  AnsatzParams seed;  // coefficients + duration + free mask; empty coeff = pi/T seed

  static OptimizeOptions defaults(double duration_ns = 40.0, int degree = 2);
};

struct OptimizeResult {
  AnsatzParams params;
  double c_fidelity = 0.0;
  double c_robust = 0.0;
  double c_total = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
};

/// Minimize w*C_fidelity + (1-w)*C_robust over the free coefficients with
/// L-BFGS from the seed (default a0 = pi/T, higher orders zero). Deterministic
/// for fixed options. Non-convergence returns converged=false, never throws;
/// a non-finite cost raises NumericError.
OptimizeResult optimize_pulse(const OptimizeOptions& opts);

/// Resolve the time scale S on which a dimensionless (a0, a2) pair describes
/// this ansatz: scan the duration for the joint zero of C_fidelity and
/// C_robust (coarse scan + golden-section polish of C_f + C_r). Returns the
/// dimensionless duration S and the residual min cost.
struct ScaleResolution {
  double scale = 0.0;      // dimensionless duration S
  double residual = 0.0;   // C_fidelity + C_robust at S
};
ScaleResolution resolve_time_scale(double a0, double a2, double s_min = 2.0, double s_max = 90.0);

/// Coefficients re-expressed on a dimensionless axis of duration `scale`
/// (a_n -> a_n * u^(n+1), u = T/scale). Inverse of from_normalized.
std::vector<double> to_normalized(const AnsatzParams& p, double scale);
AnsatzParams from_normalized(const std::vector<double>& coeff, double scale, double duration_ns);

}  // namespace dcg
