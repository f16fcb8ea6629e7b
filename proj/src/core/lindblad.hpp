#pragma once

#include "core/envelope.hpp"
#include "core/qubit_model.hpp"
#include "core/types.hpp"

namespace dcg {

/// A gate as either a unitary or a CPTP map. Process maps are column-stacking
/// superoperators: vec(E(rho)) = superop * vec(rho).
struct GateChannel {
  Mat rep;                  // dim x dim unitary, or dim^2 x dim^2 superoperator
  bool is_process = false;
  int total_dim = 2;
  int computational_dim = 2;

  Mat apply(const Mat& rho) const;

  /// composition: this after other
  GateChannel after(const GateChannel& other) const;

  static GateChannel from_unitary(const Mat& u);
  /// promote a unitary channel to a process map
  GateChannel as_process() const;
};

inline Mat vec(const Mat& rho) {
  Mat v(rho.size(), 1);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < rho.cols(); ++c)
    for (Eigen::Index r = 0; r < rho.rows(); ++r) v(k++, 0) = rho(r, c);
  return v;
}

inline Mat unvec(const Mat& v, int dim) {
  Mat rho(dim, dim);
  Eigen::Index k = 0;
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) rho(r, c) = v(k++, 0);
  return rho;
}

/// column-stacking superoperator of rho -> A rho B
Mat sandwich_superop(const Mat& a, const Mat& b);

/// Lindblad generator for Hamiltonian h and collapse operators ls (rates
/// already folded into the operators).
Mat lindblad_generator(const Mat& h, const std::vector<Mat>& ls);

/// Collapse operators for the model: relaxation 1/T1 split into downward
/// (1 - p_th)/T1 and upward p_th/T1 ladder jumps so the zero-drive steady
/// state has excited population p_th, plus pure dephasing 1/T2 - 1/(2 T1) on
/// the number operator. include_thermal=false drops the upward jumps.
std::vector<Mat> collapse_operators(const QubitModel& model, bool include_thermal = true);

/// CPTP map from integrating the master equation over the envelope with
/// midpoint-sampled per-step exponentials on the envelope's grid.
/// Throws ModelError for T2 > 2 T1 or negative rates.
GateChannel lindblad_propagate(const Envelope& env, const QubitModel& model,
                               bool include_thermal = true);

}  // namespace dcg
