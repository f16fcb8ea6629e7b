#pragma once

#include <array>
#include <vector>

namespace dcg {

/// Nonlinear least-squares fit of y = A p^L + B.
struct DecayFit {
  double a = 0.0, p = 1.0, b = 0.0;
  std::array<std::array<double, 3>, 3> covariance{};  // order (A, p, B)
  double residual = 0.0;                              // sum of squared residuals
  bool degenerate = false;                            // constant data, p pinned to 1

  double stderr_a() const;
  double stderr_p() const;
  double stderr_b() const;
};

/// Levenberg-Marquardt with the standard initialization (B from the tail,
/// A from head minus tail, p from a two-point log ratio). Throws FitError on
/// fewer than 3 distinct lengths, a singular system, or p outside (0, 1].
DecayFit fit_decay(const std::vector<double>& lengths, const std::vector<double>& values);

}  // namespace dcg
