// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "qpix/state.hpp"

namespace qpix {

enum class CanonicalFlag { None, Left, Right };

// Matrix-product state: per site j two chi_j x chi_{j+1} matrices, one per
// physical basis value. chi_0 = chi_m = 1.
struct Mps {
  // tensors[j][sigma] has shape (chi_j, chi_{j+1})
  std::vector<std::array<MatrixXcd, 2>> tensors;
  CanonicalFlag canonical = CanonicalFlag::None;

  int sites() const { return int(tensors.size()); }
  std::vector<std::int64_t> bonds() const;
  std::int64_t max_bond() const;
  void validate() const;
};

struct CompressionReport {
  std::int64_t chi_max = 0;
  std::vector<double> discarded_weight;  // per bond, sum of squared dropped singular values
  double infidelity = 0.0;
  double two_norm = 0.0;
};

// Left-to-right sweep of truncated decompositions keeping at most chi_max
// singular values per bond; the result is left-canonical and unit norm.
std::pair<Mps, CompressionReport> mps_from_state(const StateVector& state, std::int64_t chi_max);

// Dense contraction, renormalized to unit norm. Refuses more than
// kMaxDenseQubits sites.
StateVector mps_to_state(const Mps& mps);

struct EntanglementProfile {
  std::vector<double> entropies;  // cut after qubit k, k = 0 .. m-2
  double max_entropy = 0.0;
};

// Von Neumann entropy -sum lambda^2 ln lambda^2 of every contiguous cut.
EntanglementProfile entanglement_profile(const StateVector& state);

double half_chain_entropy(const StateVector& state);

// Random MPS with the given maximal bond dimension, already left-canonical.
Mps random_left_canonical_mps(int m, std::int64_t chi, std::uint64_t seed);

}  // namespace qpix
