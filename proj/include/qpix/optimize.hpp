// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpix/circuit.hpp"

namespace qpix {

enum class Retraction { Qr, Polar };

struct OptimizerConfig {
  int steps = 2000;
  double lr = 5e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int patience = 200;
  Retraction retraction = Retraction::Qr;

  void validate() const;
};

struct OptTrace {
  std::vector<double> infidelity;  // value at the start of each step
  double best_infidelity = 1.0;
  int best_step = 0;
  Circuit best_circuit;
  double wall_seconds = 0.0;
};

// F = |<target|psi_circ>|^2 together with the per-gate Euclidean gradient
// D with dF = Re tr(D^dag dU); the overlap is linear in each gate, so
// D = 2 * overlap * conj(environment).
std::pair<double, std::vector<MatrixXcd>> fidelity_gradient(const Circuit& circuit,
                                                            const StateVector& target);

// Projects onto the tangent space at U, (G - U G^dag U) / 2 for the
// canonical metric.
MatrixXcd tangent_project(const MatrixXcd& u, const MatrixXcd& euclid_grad);

MatrixXcd retract(const MatrixXcd& u, Retraction kind);

// Per-gate Adam state living in ambient matrix coordinates.
struct AdamMoments {
  MatrixXcd m;
  MatrixXd v;
  int t = 0;
};

// One ascent step: tangent projection, moment update, retraction. A zero
// update leaves the gate untouched exactly.
MatrixXcd riemannian_step(const MatrixXcd& gate, const MatrixXcd& euclid_grad, AdamMoments& moments,
                          const OptimizerConfig& config);

// Riemannian Adam ascent on the fidelity; deterministic given the seeds,
// returns the best-so-far circuit rather than the last iterate.
std::pair<Circuit, OptTrace> optimize(const Circuit& circuit, const StateVector& target,
                                      const OptimizerConfig& config);

}  // namespace qpix
