#pragma once

#include <functional>
#include <vector>

namespace dcg {

struct LbfgsOptions {
  int history = 10;
  int max_iterations = 4000;
  double gradient_tol = 1e-7;     // stop on ||g||_inf below this
  double armijo_c1 = 1e-4;
  double step_shrink = 0.5;
  int max_backtracks = 60;
  // central-difference step, relative to max(|x_i|, fd_floor)
  double fd_step = 1e-7;
  double fd_floor = 1e-2;
};

struct LbfgsResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;  // inf-norm at the final point
  int iterations = 0;
  bool converged = false;      // gradient_norm < gradient_tol
};

using ScalarFn = std::function<double(const std::vector<double>&)>;

/// Central finite-difference gradient with per-coordinate relative steps.
std::vector<double> finite_difference_gradient(const ScalarFn& f, const std::vector<double>& x,
                                               double rel_step = 1e-7, double floor = 1e-2);

/// Limited-memory BFGS (two-loop recursion) with Armijo backtracking.
/// Deterministic: fixed evaluation order, no randomization. Accepted steps
/// never increase f. Kinked objectives (|.|) are run as-is; the sign at a
/// kink is taken as +1 by the central differences.
LbfgsResult lbfgs_minimize(const ScalarFn& f, std::vector<double> x0, const LbfgsOptions& opts);

}  // namespace dcg
