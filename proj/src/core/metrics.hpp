#pragma once

#include "core/lindblad.hpp"
#include "core/types.hpp"

namespace dcg {

/// Average gate fidelity of a channel against a target unitary on the
/// computational subspace. Unitary channels use
/// (|Tr(U_t^dag U_cc)|^2 + d) / (d (d+1)); process channels the standard
/// entanglement-fidelity average. Throws ConfigError for a non-unitary target.
double average_gate_fidelity(const GateChannel& channel, const Mat& target);

/// 1 - average_gate_fidelity for a unitary channel, computed from the Pauli
/// components of the error unitary so values down to ~1e-30 are exact
/// (no 1 - (1 - eps) cancellation). Computational block only.
double unitary_infidelity(const Mat& u, const Mat& target);

/// Population of level 2 after the channel acts on a computational-subspace
/// state (density matrix, 2x2). Requires total_dim >= 3.
double leakage_population(const GateChannel& channel, const Mat& initial_state);

}  // namespace dcg
