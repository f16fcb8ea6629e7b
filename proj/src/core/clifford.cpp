#include "core/clifford.hpp"

#include <cmath>

#include "core/propagate.hpp"

namespace dcg {

bool same_up_to_phase(const Mat& a, const Mat& b, double tol) {
  double t = std::abs((a.adjoint() * b).trace());
  return std::abs(t - static_cast<double>(a.rows())) < tol;
}

namespace {

struct CliffordData {
  std::vector<CliffordGate> table;
  std::vector<Mat> unitaries;
  std::array<std::array<int, 24>, 24> compose;
  std::array<int, 24> inverse;
  int identity_index = -1;
  int x90_index = -1;
};

Mat word_unitary(double a, double b, double c) {
  Mat x90 = x_rotation(kPi / 2.0, 2);
  return virtual_z(c, 2) * x90 * virtual_z(b, 2) * x90 * virtual_z(a, 2);
}

const CliffordData& data() {
  static const CliffordData d = [] {
    CliffordData out;
    const double step = kPi / 2.0;
    for (int ia = 0; ia < 4; ++ia)
      for (int ib = 0; ib < 4; ++ib)
        for (int ic = 0; ic < 4; ++ic) {
          Mat u = word_unitary(ia * step, ib * step, ic * step);
          bool known = false;
          for (const Mat& v : out.unitaries)
            if (same_up_to_phase(u, v)) {
              known = true;
              break;
            }
          if (known) continue;
          CliffordGate g;
          g.index = static_cast<int>(out.table.size());
          g.z_angles = {ia * step, ib * step, ic * step};
          out.table.push_back(g);
          out.unitaries.push_back(u);
        }
    if (out.table.size() != 24)
      throw NumericError("clifford enumeration did not produce 24 classes");

    Mat id = Mat::Identity(2, 2);
    Mat x90 = x_rotation(kPi / 2.0, 2);
    for (int i = 0; i < 24; ++i) {
      if (same_up_to_phase(out.unitaries[i], id)) out.identity_index = i;
      if (same_up_to_phase(out.unitaries[i], x90)) out.x90_index = i;
    }
    if (out.identity_index < 0 || out.x90_index < 0)
      throw NumericError("clifford table lacks identity or X90");

    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b) {
        Mat prod = out.unitaries[b] * out.unitaries[a];  // b after a
        int hit = -1;
        for (int k = 0; k < 24; ++k)
          if (same_up_to_phase(prod, out.unitaries[k])) {
            hit = k;
            break;
          }
        if (hit < 0) throw NumericError("clifford table is not closed");
        out.compose[a][b] = hit;
      }
    for (int a = 0; a < 24; ++a) {
      out.inverse[a] = -1;
      for (int k = 0; k < 24; ++k)
        if (out.compose[a][k] == out.identity_index) {
          out.inverse[a] = k;
          break;
        }
      if (out.inverse[a] < 0) throw NumericError("clifford table lacks an inverse");
    }
    return out;
  }();
  return d;
}

}  // namespace

const std::vector<CliffordGate>& clifford_table() { return data().table; }
const Mat& clifford_unitary(int index) { return data().unitaries.at(index); }
int clifford_compose(int a, int b) { return data().compose[a][b]; }
int clifford_inverse(int a) { return data().inverse[a]; }
int clifford_identity_index() { return data().identity_index; }
int clifford_x90_index() { return data().x90_index; }

}  // namespace dcg
