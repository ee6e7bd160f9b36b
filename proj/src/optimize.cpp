// SPDX-License-Identifier: Apache-2.0
#include "qpix/optimize.hpp"

#include <chrono>

#include <Eigen/SVD>

namespace qpix {

void OptimizerConfig::validate() const {
  if (lr < 0.0) throw std::invalid_argument("OptimizerConfig: lr must not be negative");
  if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0)
    throw std::invalid_argument("OptimizerConfig: moment parameters must lie in [0, 1)");
  if (steps < 1) throw std::invalid_argument("OptimizerConfig: steps must be >= 1");
  if (patience < 1) throw std::invalid_argument("OptimizerConfig: patience must be >= 1");
}

std::pair<double, std::vector<MatrixXcd>> fidelity_gradient(const Circuit& circuit,
                                                            const StateVector& target) {
  if (circuit.m != target.m) throw std::invalid_argument("fidelity_gradient: dimension mismatch");
  int gate_count = int(circuit.gates.size());

  // forward states phi_i before gate i
  std::vector<VectorXcd> forward(gate_count + 1);
  forward[0] = VectorXcd::Zero(target.dim());
  forward[0][0] = 1.0;
  for (int i = 0; i < gate_count; ++i) {
    forward[i + 1] = forward[i];
    apply_gate(forward[i + 1], circuit.m, circuit.gates[i]);
  }
  cxd overlap = target.amps.dot(forward[gate_count]);
  double fid = std::norm(overlap);

  // backward bras b_i with <b_{i+1}|G_i|phi_i> = overlap throughout
  std::vector<MatrixXcd> grads(gate_count);
  VectorXcd bra = target.amps;
  for (int i = gate_count - 1; i >= 0; --i) {
    MatrixXcd env = gate_environment(bra, forward[i], circuit.m, circuit.gates[i]);
    // dF = Re tr(D^dag dU) with D = 2 overlap conj(env)
    grads[i] = 2.0 * overlap * env.conjugate();
    if (i > 0) apply_gate_adjoint(bra, circuit.m, circuit.gates[i]);
  }
  return {fid, std::move(grads)};
}

MatrixXcd tangent_project(const MatrixXcd& u, const MatrixXcd& euclid_grad) {
  return 0.5 * (euclid_grad - u * euclid_grad.adjoint() * u);
}

MatrixXcd retract(const MatrixXcd& u, Retraction kind) {
  if (kind == Retraction::Qr) {
    Eigen::HouseholderQR<MatrixXcd> qr(u);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(u.rows(), u.cols());
    MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::int64_t i = 0; i < u.cols(); ++i) {
      cxd d = r(i, i);
      double mag = std::abs(d);
      if (mag > 0) q.col(i) *= d / mag;
    }
    return q;
  }
  Eigen::JacobiSVD<MatrixXcd> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

MatrixXcd riemannian_step(const MatrixXcd& gate, const MatrixXcd& euclid_grad, AdamMoments& moments,
                          const OptimizerConfig& config) {
  if (matrix_distance_from_unitary(gate) > 1e-8)
    throw std::invalid_argument("riemannian_step: gate is not unitary");
  MatrixXcd tangent = tangent_project(gate, euclid_grad);
  if (moments.t == 0) {
    moments.m = MatrixXcd::Zero(gate.rows(), gate.cols());
    moments.v = MatrixXd::Zero(gate.rows(), gate.cols());
  }
  moments.t += 1;
  moments.m = config.beta1 * moments.m + (1.0 - config.beta1) * tangent;
  moments.v = config.beta2 * moments.v + (1.0 - config.beta2) * tangent.cwiseAbs2();
  double bias1 = 1.0 - std::pow(config.beta1, moments.t);
  double bias2 = 1.0 - std::pow(config.beta2, moments.t);
  MatrixXcd m_hat = moments.m / bias1;
  MatrixXd v_hat = moments.v / bias2;
  MatrixXcd step =
      config.lr * (m_hat.array() / (v_hat.array().sqrt() + config.eps)).matrix();
  // elementwise scaling leaves the tangent space; project back before moving
  step = tangent_project(gate, step);
  if (step.norm() == 0.0) return gate;
  return retract(gate + step, config.retraction);
}

std::pair<Circuit, OptTrace> optimize(const Circuit& circuit, const StateVector& target,
                                      const OptimizerConfig& config) {
  config.validate();
  auto t0 = std::chrono::steady_clock::now();

  Circuit current = circuit;
  OptTrace trace;
  trace.best_circuit = current;
  trace.best_infidelity = 2.0;  // above any reachable value
  trace.infidelity.reserve(config.steps);

  std::vector<AdamMoments> moments(current.gates.size());
  for (int step = 0; step < config.steps; ++step) {
    auto [fid, grads] = fidelity_gradient(current, target);
    double infid = std::max(0.0, 1.0 - fid);
    trace.infidelity.push_back(infid);
    if (infid < trace.best_infidelity - config.tol) {
      trace.best_infidelity = infid;
      trace.best_step = step;
      trace.best_circuit = current;
    } else if (infid < trace.best_infidelity) {
      trace.best_infidelity = infid;
      trace.best_circuit = current;
    }
    if (step - trace.best_step >= config.patience) break;
    for (std::size_t g = 0; g < current.gates.size(); ++g)
      current.gates[g].matrix = riemannian_step(current.gates[g].matrix, grads[g], moments[g], config);
  }
  trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {trace.best_circuit, trace};
}

}  // namespace qpix
