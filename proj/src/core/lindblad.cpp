#include "core/lindblad.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "core/propagate.hpp"

namespace dcg {

Mat GateChannel::apply(const Mat& rho) const {
  if (is_process) return unvec(rep * vec(rho), total_dim);
  return rep * rho * rep.adjoint();
}

GateChannel GateChannel::after(const GateChannel& other) const {
  if (is_process != other.is_process) {
    GateChannel a = is_process ? *this : this->as_process();
    GateChannel b = other.is_process ? other : other.as_process();
    return a.after(b);
  }
  GateChannel out = *this;
  out.rep = rep * other.rep;
  return out;
}

GateChannel GateChannel::from_unitary(const Mat& u) {
  GateChannel c;
  c.rep = u;
  c.is_process = false;
  c.total_dim = static_cast<int>(u.rows());
  c.computational_dim = 2;
  return c;
}

GateChannel GateChannel::as_process() const {
  if (is_process) return *this;
  GateChannel c = *this;
  c.rep = sandwich_superop(rep, rep.adjoint());
  c.is_process = true;
  return c;
}

Mat sandwich_superop(const Mat& a, const Mat& b) {
  // vec(A rho B) = (B^T kron A) vec(rho)
  return kron(b.transpose(), a);
}

Mat lindblad_generator(const Mat& h, const std::vector<Mat>& ls) {
  const int d = static_cast<int>(h.rows());
  Mat id = Mat::Identity(d, d);
  Mat gen = Complex(0, -1) * (sandwich_superop(h, id) - sandwich_superop(id, h));
  for (const Mat& l : ls) {
    Mat ldl = l.adjoint() * l;
    gen += sandwich_superop(l, l.adjoint()) - 0.5 * sandwich_superop(ldl, id) -
           0.5 * sandwich_superop(id, ldl);
  }
  return gen;
}

std::vector<Mat> collapse_operators(const QubitModel& model, bool include_thermal) {
  model.validate();
  const int d = model.levels;
  std::vector<Mat> ls;
  if (model.t1_ns > 0.0) {
    double down = (1.0 - model.thermal_excitation) / model.t1_ns;
    double up = include_thermal ? model.thermal_excitation / model.t1_ns : 0.0;
    Mat a = Mat::Zero(d, d);  // truncated ladder operator
    for (int j = 1; j < d; ++j) a(j - 1, j) = std::sqrt(static_cast<double>(j));
    if (down > 0.0) ls.push_back(std::sqrt(down) * a);
    if (up > 0.0) ls.push_back(std::sqrt(up) * Mat(a.adjoint()));
  }
  if (model.t2_ns > 0.0) {
    double relax = model.t1_ns > 0.0 ? 1.0 / (2.0 * model.t1_ns) : 0.0;
    double dephase = 1.0 / model.t2_ns - relax;
    if (dephase < -1e-15) throw ModelError("negative pure-dephasing rate (T2 > 2 T1)");
    if (dephase > 0.0) {
      Mat num = Mat::Zero(d, d);
      for (int j = 0; j < d; ++j) num(j, j) = j;
      ls.push_back(std::sqrt(2.0 * dephase) * num);
    }
  }
  return ls;
}

GateChannel lindblad_propagate(const Envelope& env, const QubitModel& model,
                               bool include_thermal) {
  std::vector<Mat> ls = collapse_operators(model, include_thermal);
  const int d = model.levels;
  GateChannel out;
  out.is_process = true;
  out.total_dim = d;
  out.computational_dim = 2;
  Mat e = Mat::Identity(d * d, d * d);
  for (const Complex& s : env.samples) {
    Mat gen = lindblad_generator(drive_hamiltonian(s, model), ls);
    Mat step = (gen * env.dt_ns).exp();
    e = step * e;
  }
  if (!e.allFinite()) throw NumericError("master-equation propagation diverged");
  out.rep = e;
  return out;
}

}  // namespace dcg
