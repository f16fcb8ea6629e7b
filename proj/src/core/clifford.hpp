#pragma once

#include <array>
#include <vector>

#include "core/types.hpp"

namespace dcg {

/// One single-qubit Clifford, realized as Z(c) X90 Z(b) X90 Z(a) with three
/// virtual-Z angles (applied a first) and exactly two physical X_pi/2 pulses.
struct CliffordGate {
  int index = 0;
  std::array<double, 3> z_angles = {0.0, 0.0, 0.0};  // a, b, c in application order
};

/// The canonical 24-element table, built once at first use by enumerating
/// Z X90 Z X90 Z words over multiples of pi/2 and keeping the first
/// representative of each phase-equivalence class.
const std::vector<CliffordGate>& clifford_table();

/// ideal 2-level unitary of table entry i (phase-canonical)
const Mat& clifford_unitary(int index);

/// group composition: index of (b after a); built by brute force, exact
int clifford_compose(int a, int b);

/// index of the inverse element
int clifford_inverse(int a);

/// index of the identity class and of the bare X90 class
int clifford_identity_index();
int clifford_x90_index();

/// true if a equals b up to global phase
bool same_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9);

}  // namespace dcg
