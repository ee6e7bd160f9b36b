// SPDX-License-Identifier: Apache-2.0
#include "qpix/state.hpp"

namespace qpix {

StateVector::StateVector(int m_, VectorXcd amps_) : m(m_), amps(std::move(amps_)) { validate(); }

void StateVector::validate() const {
  if (m < 1 || m > kMaxDenseQubits)
    throw std::invalid_argument("StateVector: qubit count out of range");
  if (amps.size() != dim()) throw std::invalid_argument("StateVector: dimension mismatch");
  if (std::abs(amps.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("StateVector: not normalized");
}

double fidelity(const StateVector& x, const StateVector& y) {
  if (x.m != y.m) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::norm(x.amps.dot(y.amps));
}

double two_norm_distance(const StateVector& x, const StateVector& y) {
  if (x.m != y.m) throw std::invalid_argument("two_norm_distance: dimension mismatch");
  double overlap = std::abs(x.amps.dot(y.amps));
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - overlap)));
}

StateVector random_normal_state(int m, std::uint64_t seed) {
  if (m < 1 || m > kMaxDenseQubits)
    throw std::invalid_argument("random_normal_state: qubit count out of range");
  Rng rng(seed);
  VectorXcd amps(pow2(m));
  for (std::int64_t i = 0; i < amps.size(); ++i) amps[i] = cxd(rng.normal(), 0.0);
  amps /= amps.norm();
  return StateVector(m, std::move(amps));
}

StateVector permute_qubits(const StateVector& state, const std::vector<int>& perm) {
  int m = state.m;
  if (int(perm.size()) != m) throw std::invalid_argument("permute_qubits: bad permutation size");
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[p]) throw std::invalid_argument("permute_qubits: not a permutation");
    seen[p] = true;
  }
  VectorXcd out(state.dim());
  for (std::int64_t src = 0; src < state.dim(); ++src) {
    std::int64_t dst = 0;
    for (int t = 0; t < m; ++t) {
      std::int64_t bit = (src >> (m - 1 - perm[t])) & 1;
      dst |= bit << (m - 1 - t);
    }
    out[dst] = state.amps[src];
  }
  return StateVector(m, std::move(out));
}

}  // namespace qpix
