// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qpix/circuit.hpp"

using namespace qpix;

TEST_CASE("chi = 1 product MPS maps to m single-qubit gates with fidelity 1") {
  Mps mps = random_left_canonical_mps(6, 1, 5);
  Circuit circuit = mps_to_circuit(mps);
  CHECK(circuit.gates.size() == 6);
  for (const auto& gate : circuit.gates) CHECK(gate.arity() == 1);
  CHECK(fidelity(apply_circuit(circuit), mps_to_state(mps)) >= 1.0 - 1e-12);
}

TEST_CASE("random chi = 2 MPS maps to a staircase of two-qubit gates") {
  Mps mps = random_left_canonical_mps(8, 2, 11);
  Circuit circuit = mps_to_circuit(mps);
  CHECK(circuit.gates.size() == 8);
  int two_qubit = 0;
  for (const auto& gate : circuit.gates) two_qubit += gate.arity() == 2 ? 1 : 0;
  CHECK(two_qubit == 7);  // the first emitted site gate shrinks to one qubit
  CHECK(fidelity(apply_circuit(circuit), mps_to_state(mps)) >= 1.0 - 1e-10);
}

TEST_CASE("chi = 4 MPS yields three-qubit gates passing the unitarity invariant") {
  Mps mps = random_left_canonical_mps(8, 4, 13);
  Circuit circuit = mps_to_circuit(mps);
  int widest = 0;
  for (const auto& gate : circuit.gates) {
    widest = std::max(widest, gate.arity());
    CHECK(matrix_distance_from_unitary(gate.matrix) < 1e-10);
  }
  CHECK(widest == 3);
  CHECK(fidelity(apply_circuit(circuit), mps_to_state(mps)) >= 1.0 - 1e-10);
}

TEST_CASE("mps_to_circuit requires a left-canonical MPS") {
  Mps mps = random_left_canonical_mps(4, 2, 17);
  mps.canonical = CanonicalFlag::None;
  CHECK_THROWS(mps_to_circuit(mps));
}

TEST_CASE("seq1d staircase pattern and gate count") {
  Circuit circuit = ansatz_seq1d(3, 1, 7);
  REQUIRE(circuit.gates.size() == 2);
  CHECK(circuit.gates[0].targets == std::vector<int>{0, 1});
  CHECK(circuit.gates[1].targets == std::vector<int>{1, 2});
  for (int layers : {1, 2, 3})
    CHECK(ansatz_seq1d(9, layers, 1).gates.size() == std::size_t(layers * 8));
}

TEST_CASE("identity-initialized seq1d prepares the all-zeros state") {
  Circuit circuit = ansatz_seq1d(5, 2, 3, /*perturbation=*/0.0);
  StateVector state = apply_circuit(circuit);
  CHECK(std::abs(state.amps[0] - cxd(1, 0)) < 1e-12);
}

TEST_CASE("seq2d on the 3x4-minus-top-left lattice follows the diagonal schedule") {
  Layout2D layout = default_layout(11);
  CHECK(layout.site_count() == 11);
  Circuit circuit = ansatz_seq2d(layout, 1, 1);
  // hand-enumerated: per diagonal, horizontals top-to-bottom, then verticals
  std::vector<std::pair<int, int>> expected = {
      {0, 1}, {3, 4}, {0, 4}, {3, 7},          // diagonal 1
      {1, 2}, {4, 5}, {7, 8}, {1, 5}, {4, 8},  // diagonal 2
      {5, 6}, {8, 9}, {2, 6}, {5, 9},          // diagonal 3
      {9, 10}, {6, 10}};                       // diagonal 4
  REQUIRE(circuit.gates.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(circuit.gates[i].targets[0] == expected[i].first);
    CHECK(circuit.gates[i].targets[1] == expected[i].second);
  }
}

TEST_CASE("1 x m layout degenerates to the 1-D staircase") {
  Layout2D layout;
  layout.rows = 1;
  layout.cols = 6;
  Circuit flat = ansatz_seq2d(layout, 1, 9);
  Circuit chain = ansatz_seq1d(6, 1, 9);
  REQUIRE(flat.gates.size() == chain.gates.size());
  for (std::size_t i = 0; i < flat.gates.size(); ++i)
    CHECK(flat.gates[i].targets == chain.gates[i].targets);
}

TEST_CASE("the 10-qubit amplitude-encoding layout is accepted") {
  Layout2D layout = default_layout(10);
  CHECK(layout.site_count() == 10);
  CHECK(layout.connected());
  Circuit circuit = ansatz_seq2d(layout, 1, 3);
  CHECK(circuit.m == 10);
  CHECK(!circuit.gates.empty());
}

TEST_CASE("disconnected layouts are rejected") {
  Layout2D layout;
  layout.rows = 1;
  layout.cols = 3;
  layout.removed = {{0, 1}};
  CHECK_THROWS(ansatz_seq2d(layout, 1, 1));
}

TEST_CASE("MERA layer sizes follow the halving rule") {
  CHECK(mera_layer_sizes(8) == std::vector<int>{2, 4, 8});
  CHECK(mera_layer_sizes(11) == std::vector<int>{2, 3, 6, 11});
  CHECK(mera_layer_sizes(2) == std::vector<int>{2});
  CHECK(mera_layer_sizes(13) == std::vector<int>{2, 4, 7, 13});
  // next = (current - 1) / 2 + 1 for odd current
  for (int m = 2; m <= 20; ++m) {
    auto sizes = mera_layer_sizes(m);
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
      CHECK(sizes[i] == (sizes[i + 1] + 1) / 2);
  }
}

TEST_CASE("MERA on two qubits is a single gate") {
  Circuit circuit = ansatz_mera(2, 1);
  CHECK(circuit.gates.size() == 1);
  CHECK(circuit.gates[0].targets == std::vector<int>{0, 1});
}

TEST_CASE("MERA gate structure for m = 8") {
  Circuit circuit = ansatz_mera(8, 1);
  // root + (2 iso + 2 dis) + (4 iso + 4 dis)
  CHECK(circuit.gates.size() == 13);
  StateVector state = apply_circuit(circuit);
  CHECK(std::abs(state.norm() - 1.0) < 1e-12);
}

TEST_CASE("empty circuit prepares the all-zeros state") {
  Circuit circuit;
  circuit.m = 3;
  circuit.ansatz = AnsatzKind::Seq1d;
  StateVector state = apply_circuit(circuit);
  CHECK(std::abs(state.amps[0] - cxd(1, 0)) < 1e-15);
}

TEST_CASE("an X-like gate on qubit 0 prepares |10...0>") {
  Circuit circuit;
  circuit.m = 4;
  circuit.ansatz = AnsatzKind::Seq1d;
  Gate x;
  x.targets = {0};
  x.matrix = MatrixXcd(2, 2);
  x.matrix << 0, 1, 1, 0;
  circuit.gates.push_back(x);
  StateVector state = apply_circuit(circuit);
  CHECK(std::abs(state.amps[0b1000] - cxd(1, 0)) < 1e-15);
}

TEST_CASE("a circuit followed by its reversed conjugate returns to |0...0>") {
  Circuit circuit = ansatz_seq1d(6, 2, 21, 0.5);
  Circuit inverse = circuit;
  inverse.gates.clear();
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    Gate gate = *it;
    gate.matrix = it->matrix.adjoint();
    inverse.gates.push_back(gate);
  }
  Circuit both = circuit;
  for (const auto& gate : inverse.gates) both.gates.push_back(gate);
  StateVector state = apply_circuit(both);
  CHECK(std::abs(state.amps[0] - cxd(1, 0)) < 1e-10);
}

TEST_CASE("param_count isometry cases") {
  // single two-qubit gate on |00>
  Circuit one;
  one.m = 2;
  one.ansatz = AnsatzKind::Seq1d;
  Gate gate;
  gate.targets = {0, 1};
  gate.matrix = MatrixXcd::Identity(4, 4);
  one.gates.push_back(gate);
  CHECK(param_count(one) == 7);

  // seq1d m = 3, one layer: 7 + 12
  CHECK(param_count(ansatz_seq1d(3, 1, 1)) == 19);

  // every extra layer adds 16 (m - 1)
  for (int m : {4, 7}) {
    std::int64_t base = param_count(ansatz_seq1d(m, 1, 1));
    for (int layers : {2, 3})
      CHECK(param_count(ansatz_seq1d(m, layers, 1)) ==
            base + std::int64_t(16 * (m - 1) * (layers - 1)));
  }
}

TEST_CASE("param_count for the 11-qubit experiment ansaetze") {
  CHECK(param_count(ansatz_seq1d(11, 1, 1)) == 115);
  CHECK(param_count(ansatz_seq1d(11, 2, 1)) == 275);
  CHECK(param_count(ansatz_seq1d(11, 3, 1)) == 435);
  CHECK(param_count(ansatz_mera(11, 1)) == 259);
  CHECK(param_count(ansatz_seq2d(default_layout(11), 1, 1)) == 194);
}

TEST_CASE("param_count rejects unknown ansatz metadata") {
  Circuit circuit;
  circuit.m = 2;
  CHECK_THROWS(param_count(circuit));
}

TEST_CASE("ansatz gate counts match their closed forms") {
  for (int m : {4, 9, 12})
    for (int layers : {1, 2})
      CHECK(ansatz_seq1d(m, layers, 3).gates.size() == std::size_t(layers * (m - 1)));
  // seq2d gate count = number of lattice edges per layer
  Layout2D grid = default_layout(12);
  int edges = 0;
  for (int r = 0; r < grid.rows; ++r)
    for (int c = 0; c < grid.cols; ++c) {
      if (grid.present(r, c) && grid.present(r, c + 1)) ++edges;
      if (grid.present(r, c) && grid.present(r + 1, c)) ++edges;
    }
  for (int layers : {1, 2})
    CHECK(ansatz_seq2d(grid, layers, 3).gates.size() == std::size_t(layers * edges));
  // MERA: one root gate plus, per expansion layer of width S, S gates when S
  // is even and S - 1 when S is odd
  for (int m = 2; m <= 14; ++m) {
    auto sizes = mera_layer_sizes(m);
    std::size_t expected = 1;
    for (std::size_t t = 1; t < sizes.size(); ++t)
      expected += std::size_t(sizes[t] - (sizes[t] % 2));
    CHECK(ansatz_mera(m, 5).gates.size() == expected);
  }
}

TEST_CASE("gates validate their targets and unitarity") {
  Gate gate;
  gate.targets = {0, 0};
  gate.matrix = MatrixXcd::Identity(4, 4);
  CHECK_THROWS(gate.validate(3));
  gate.targets = {0, 5};
  CHECK_THROWS(gate.validate(3));
  gate.targets = {0, 1};
  gate.matrix *= 2.0;
  CHECK_THROWS(gate.validate(3));
}

TEST_CASE("mps-to-circuit round trip over chi and m") {
  std::uint64_t seed = 100;
  for (std::int64_t chi : {1, 2, 4})
    for (int m : {4, 9, 12}) {
      Mps mps = random_left_canonical_mps(m, chi, seed++);
      Circuit circuit = mps_to_circuit(mps);
      CHECK(circuit.gates.size() == std::size_t(m));
      CHECK(fidelity(apply_circuit(circuit), mps_to_state(mps)) >= 1.0 - 1e-10);
    }
}
