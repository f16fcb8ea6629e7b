#include "core/lbfgs.hpp"

#include <cmath>
#include <deque>

#include "core/types.hpp"

namespace dcg {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> finite_difference_gradient(const ScalarFn& f, const std::vector<double>& x,
                                               double rel_step, double floor) {
  std::vector<double> g(x.size());
  std::vector<double> xp = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double h = rel_step * std::max(std::abs(x[i]), floor);
    xp[i] = x[i] + h;
    double fp = f(xp);
    xp[i] = x[i] - h;
    double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

LbfgsResult lbfgs_minimize(const ScalarFn& f, std::vector<double> x0, const LbfgsOptions& opts) {
  const std::size_t n = x0.size();
  LbfgsResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  if (!std::isfinite(res.value)) throw NumericError("objective is not finite at the seed");

  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  std::vector<double> g = finite_difference_gradient(f, res.x, opts.fd_step, opts.fd_floor);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    res.gradient_norm = inf_norm(g);
    res.iterations = iter;
    if (res.gradient_norm < opts.gradient_tol) {
      res.converged = true;
      return res;
    }

    // two-loop recursion
    std::vector<double> q = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * dot(s_hist[k], q);
      for (std::size_t i = 0; i < n; ++i) q[i] -= alpha[k] * y_hist[k][i];
    }
    if (!s_hist.empty()) {
      const auto& s = s_hist.back();
      const auto& y = y_hist.back();
      double gamma = dot(s, y) / std::max(dot(y, y), 1e-300);
      for (double& qi : q) qi *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      double beta = rho_hist[k] * dot(y_hist[k], q);
      for (std::size_t i = 0; i < n; ++i) q[i] += s_hist[k][i] * (alpha[k] - beta);
    }
    // descent direction
    std::vector<double> dir(n);
    for (std::size_t i = 0; i < n; ++i) dir[i] = -q[i];
    double gd = dot(g, dir);
    if (gd >= 0.0) {  // fall back to steepest descent
      for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
      gd = dot(g, dir);
      if (gd >= 0.0) break;  // flat to gradient resolution
    }

    // Armijo backtracking
    double step = 1.0;
    std::vector<double> x_new(n);
    double f_new = res.value;
    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + step * dir[i];
      f_new = f(x_new);
      if (std::isfinite(f_new) && f_new <= res.value + opts.armijo_c1 * step * gd) {
        accepted = true;
        break;
      }
      step *= opts.step_shrink;
    }
    if (!accepted) {
      // kinked valleys defeat the curvature model occasionally; retry once
      // from steepest descent before giving up
      for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
      gd = dot(g, dir);
      step = 1.0 / std::max(1.0, inf_norm(g));
      for (int bt = 0; bt < opts.max_backtracks; ++bt) {
        for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + step * dir[i];
        f_new = f(x_new);
        if (std::isfinite(f_new) && f_new < res.value) {
          accepted = true;
          break;
        }
        step *= opts.step_shrink;
      }
      if (!accepted) break;  // no descent found; stop at the best point so far
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }

    std::vector<double> g_new = finite_difference_gradient(f, x_new, opts.fd_step, opts.fd_floor);
    std::vector<double> s_vec(n), y_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      s_vec[i] = x_new[i] - res.x[i];
      y_vec[i] = g_new[i] - g[i];
    }
    double sy = dot(s_vec, y_vec);
    if (sy > 1e-300) {
      s_hist.push_back(std::move(s_vec));
      y_hist.push_back(std::move(y_vec));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    res.x = std::move(x_new);
    res.value = f_new;
    g = std::move(g_new);
  }

  res.gradient_norm = inf_norm(g);
  res.converged = res.gradient_norm < opts.gradient_tol;
  return res;
}

}  // namespace dcg
