#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

// Conventions used throughout: time in nanoseconds, angular frequencies in
// rad/ns. Rotations follow U = exp(-i * theta * sigma/2); virtual Z gates are
// diag(1, e^{i phi}, e^{2i phi}, ...) so that global phase never matters.
namespace dcg {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// the paper's integration grid: 64 steps per nanosecond
inline constexpr double kDefaultDtNs = 1.0 / 64.0;

// MHz (ordinary frequency) <-> rad/ns
inline constexpr double rad_per_ns_from_mhz(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }
inline constexpr double mhz_from_rad_per_ns(double w) { return w / kTwoPi * 1e3; }

inline Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat pauli_y() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// max-norm deviation from unitarity, ||U^dag U - I||_max
inline double unitarity_defect(const Mat& u) {
  Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

// ---- error taxonomy (mirrored by the C API status codes) ----
struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CalibrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SequencingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dcg
