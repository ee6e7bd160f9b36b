// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpix/common.hpp"

namespace qpix {

// Normalized state vector over m qubits. Qubit 0 is the most significant
// bit of the amplitude index; color qubits of an encoding occupy the most
// significant positions.
struct StateVector {
  int m = 0;
  VectorXcd amps;

  StateVector() = default;
  StateVector(int m_, VectorXcd amps_);

  std::int64_t dim() const { return pow2(m); }
  double norm() const { return amps.norm(); }
  void validate() const;
};

// |<x|y>|^2, symmetric and global-phase invariant.
double fidelity(const StateVector& x, const StateVector& y);

// min over a global phase of ||x - e^{i phi} y||_2, i.e. sqrt(2 (1 - |<x|y>|)).
double two_norm_distance(const StateVector& x, const StateVector& y);

// i.i.d. real standard-normal amplitudes, normalized. Deterministic per seed.
StateVector random_normal_state(int m, std::uint64_t seed);

// Reorders qubits: target position t carries what source qubit perm[t]
// carried. perm must be a permutation of 0..m-1.
StateVector permute_qubits(const StateVector& state, const std::vector<int>& perm);

}  // namespace qpix
