// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpix/mps.hpp"
#include "qpix/state.hpp"

namespace qpix {

// k-qubit unitary applied to the ordered targets; targets[0] is the most
// significant bit of the local basis index.
struct Gate {
  std::vector<int> targets;
  MatrixXcd matrix;

  int arity() const { return int(targets.size()); }
  void validate(int m) const;
};

enum class AnsatzKind { MpsExact, Seq1d, Seq2d, Mera, Unknown };

std::string to_string(AnsatzKind kind);
AnsatzKind ansatz_kind_from_string(const std::string& s);

struct Layout2D {
  int rows = 0;
  int cols = 0;
  std::set<std::pair<int, int>> removed;

  int site_count() const { return rows * cols - int(removed.size()); }
  bool present(int r, int c) const;
  // row-major qubit numbering over the remaining sites
  int qubit_at(int r, int c) const;
  bool connected() const;
  void validate() const;
};

// Common lattices from the 32x32-image experiments, keyed by qubit count:
// 10 -> 4x4 keeping r + c >= 3, 11 -> 3x4 minus the top-left site,
// 12 -> 3x4, 13 -> 4x4 minus the three top-left sites.
Layout2D default_layout(int m);

struct Circuit {
  int m = 0;
  std::vector<Gate> gates;
  AnsatzKind ansatz = AnsatzKind::Unknown;
  int layers = 0;
  std::optional<Layout2D> layout;

  void validate() const;
};

// Sequential circuit preparing the state of a left-canonical MPS exactly:
// one gate per site, acting on log2(chi_j) + 1 qubits, emitted from the last
// site to the first. Bond dimensions are padded to powers of two and each
// isometry is embedded in a unitary by orthonormal completion.
Circuit mps_to_circuit(const Mps& mps);

// layers x (m - 1) two-qubit gates in the staircase pattern, initialized to
// identity perturbed by seeded random unitaries of magnitude `perturbation`.
Circuit ansatz_seq1d(int m, int layers, std::uint64_t seed, double perturbation = 1e-2);

// Per layer, anti-diagonals swept from top-left to bottom-right; on each
// diagonal first the horizontal nearest-neighbor gates, then the vertical
// ones, skipping removed sites.
Circuit ansatz_seq2d(const Layout2D& layout, int layers, std::uint64_t seed,
                     double perturbation = 1e-2);

// MERA built by reversing the even/odd renormalization rule: even layers
// pair all qubits with periodic disentanglers, odd layers leave the last
// qubit unpaired and put no gate on the first qubit at the disentangling
// step.
Circuit ansatz_mera(int m, std::uint64_t seed, double perturbation = 1e-2);

// Coarse-to-fine layer widths, e.g. m = 11 -> {2, 3, 6, 11}.
std::vector<int> mera_layer_sizes(int m);

// Applies the gates in order to |0...0>.
StateVector apply_circuit(const Circuit& circuit);

// In-place dense application of a single gate (or its adjoint).
void apply_gate(VectorXcd& amps, int m, const Gate& gate);
void apply_gate_adjoint(VectorXcd& amps, int m, const Gate& gate);

// E_kl = sum over the non-target qubits of conj(bra) ket with the gate's
// local indices fixed to (k, l); the overlap <bra|G|ket> equals
// sum_kl G_kl E_kl.
MatrixXcd gate_environment(const VectorXcd& bra, const VectorXcd& ket, int m, const Gate& gate);

// Independent real parameters of the circuit seen as a product of
// isometries: a gate with f so-far-untouched inputs constrains p = 2^{k-f}
// columns of its 2^k x 2^k unitary and contributes 2 * 2^k * p - p^2
// (7 / 12 / 16 for two-qubit gates with 2 / 1 / 0 fixed inputs).
std::int64_t param_count(const Circuit& circuit);

// Orthonormal completion of the given columns to a full unitary, with
// deterministic column ordering.
MatrixXcd complete_unitary(const MatrixXcd& columns);

}  // namespace qpix
