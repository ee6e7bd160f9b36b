// SPDX-License-Identifier: Apache-2.0
#include "qpix/circuit.hpp"

#include <queue>

namespace qpix {

void Gate::validate(int m) const {
  if (targets.empty() || targets.size() > 12)
    throw std::invalid_argument("Gate: bad target count");
  std::vector<bool> seen(m, false);
  for (int t : targets) {
    if (t < 0 || t >= m) throw std::invalid_argument("Gate: target out of range");
    if (seen[t]) throw std::invalid_argument("Gate: duplicate target");
    seen[t] = true;
  }
  std::int64_t dim = pow2(arity());
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("Gate: matrix dimension mismatch");
  if (matrix_distance_from_unitary(matrix) > 1e-10)
    throw std::invalid_argument("Gate: matrix is not unitary");
}

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::MpsExact: return "mps-exact";
    case AnsatzKind::Seq1d: return "seq1d";
    case AnsatzKind::Seq2d: return "seq2d";
    case AnsatzKind::Mera: return "mera";
    case AnsatzKind::Unknown: return "unknown";
  }
  return "unknown";
}

AnsatzKind ansatz_kind_from_string(const std::string& s) {
  if (s == "mps-exact") return AnsatzKind::MpsExact;
  if (s == "seq1d") return AnsatzKind::Seq1d;
  if (s == "seq2d") return AnsatzKind::Seq2d;
  if (s == "mera") return AnsatzKind::Mera;
  return AnsatzKind::Unknown;
}

bool Layout2D::present(int r, int c) const {
  if (r < 0 || r >= rows || c < 0 || c >= cols) return false;
  return removed.find({r, c}) == removed.end();
}

int Layout2D::qubit_at(int r, int c) const {
  if (!present(r, c)) throw std::invalid_argument("Layout2D: site not present");
  int index = 0;
  for (int rr = 0; rr < rows; ++rr)
    for (int cc = 0; cc < cols; ++cc) {
      if (rr == r && cc == c) return index;
      if (present(rr, cc)) ++index;
    }
  return index;
}

bool Layout2D::connected() const {
  int total = site_count();
  if (total == 0) return false;
  std::pair<int, int> start{-1, -1};
  for (int r = 0; r < rows && start.first < 0; ++r)
    for (int c = 0; c < cols; ++c)
      if (present(r, c)) {
        start = {r, c};
        break;
      }
  std::set<std::pair<int, int>> visited{start};
  std::queue<std::pair<int, int>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    auto [r, c] = frontier.front();
    frontier.pop();
    const int dr[4] = {1, -1, 0, 0};
    const int dc[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      std::pair<int, int> next{r + dr[d], c + dc[d]};
      if (present(next.first, next.second) && visited.insert(next).second) frontier.push(next);
    }
  }
  return int(visited.size()) == total;
}

void Layout2D::validate() const {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Layout2D: empty lattice");
  for (const auto& [r, c] : removed)
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::invalid_argument("Layout2D: removed site out of range");
  if (!connected()) throw std::invalid_argument("Layout2D: disconnected layout");
}

Layout2D default_layout(int m) {
  Layout2D layout;
  switch (m) {
    case 10:
      layout.rows = 4;
      layout.cols = 4;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (r + c < 3) layout.removed.insert({r, c});
      break;
    case 11:
      layout.rows = 3;
      layout.cols = 4;
      layout.removed.insert({0, 0});
      break;
    case 12:
      layout.rows = 3;
      layout.cols = 4;
      break;
    case 13:
      layout.rows = 4;
      layout.cols = 4;
      layout.removed = {{0, 0}, {0, 1}, {1, 0}};
      break;
    default: {
      // fall back to a single row (degenerates to the 1-D staircase)
      layout.rows = 1;
      layout.cols = m;
      break;
    }
  }
  return layout;
}

void Circuit::validate() const {
  if (m < 1 || m > kMaxDenseQubits) throw std::invalid_argument("Circuit: qubit count out of range");
  for (const auto& gate : gates) gate.validate(m);
}

MatrixXcd complete_unitary(const MatrixXcd& columns) {
  std::int64_t dim = columns.rows();
  std::int64_t have = columns.cols();
  if (have > dim) throw std::invalid_argument("complete_unitary: too many columns");
  MatrixXcd u(dim, dim);
  if (have > 0) u.leftCols(have) = columns;
  // Gram-Schmidt the canonical basis against the given columns, keeping a
  // deterministic order.
  std::int64_t filled = have;
  for (std::int64_t cand = 0; cand < dim && filled < dim; ++cand) {
    VectorXcd v = VectorXcd::Zero(dim);
    v[cand] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (std::int64_t c = 0; c < filled; ++c) v -= u.col(c).dot(v) * u.col(c);
    double nrm = v.norm();
    if (nrm < 1e-8) continue;
    u.col(filled++) = v / nrm;
  }
  if (filled != dim) throw std::runtime_error("complete_unitary: completion failed");
  return u;
}

namespace {

int bond_exponent(std::int64_t chi) {
  int eta = 0;
  while (pow2(eta) < chi) ++eta;
  return eta;
}

}  // namespace

Circuit mps_to_circuit(const Mps& mps) {
  if (mps.canonical != CanonicalFlag::Left)
    throw std::invalid_argument("mps_to_circuit: MPS must be left-canonical");
  mps.validate();
  int m = mps.sites();
  std::vector<std::int64_t> bond = mps.bonds();
  // pad bond dimensions to powers of two
  std::vector<int> eta(m + 1, 0);
  for (int j = 0; j <= m; ++j) eta[j] = bond_exponent(bond[j]);

  Circuit circuit;
  circuit.m = m;
  circuit.ansatz = AnsatzKind::MpsExact;
  circuit.layers = 1;

  // Gates are emitted from the last site to the first. The gate of site j
  // spans qubits j - eta_j .. j; it consumes the bond to its right (on the
  // trailing eta_{j+1} qubits) plus fresh |0> qubits and outputs the site's
  // physical qubit and the bond to its left.
  for (int j = m - 1; j >= 0; --j) {
    std::int64_t dim = pow2(eta[j] + 1);
    std::int64_t cols_in = pow2(eta[j + 1]);
    MatrixXcd iso = MatrixXcd::Zero(dim, cols_in);
    for (std::int64_t beta = 0; beta < bond[j + 1]; ++beta)
      for (std::int64_t alpha = 0; alpha < bond[j]; ++alpha)
        for (int sigma = 0; sigma < 2; ++sigma)
          iso(alpha * 2 + sigma, beta) = mps.tensors[j][sigma](alpha, beta);
    // columns for padded bond values are never reached; they join the
    // orthonormal completion
    Gate gate;
    gate.targets.resize(eta[j] + 1);
    for (int t = 0; t <= eta[j]; ++t) gate.targets[t] = j - eta[j] + t;
    gate.matrix = complete_unitary(iso.leftCols(bond[j + 1]));
    circuit.gates.push_back(std::move(gate));
  }
  circuit.validate();
  return circuit;
}

namespace {

Gate two_qubit_gate(int a, int b, Rng& rng, double perturbation) {
  Gate gate;
  gate.targets = {a, b};
  gate.matrix = random_near_identity_unitary(rng, 4, perturbation);
  return gate;
}

}  // namespace

Circuit ansatz_seq1d(int m, int layers, std::uint64_t seed, double perturbation) {
  if (m < 2) throw std::invalid_argument("ansatz_seq1d: need m >= 2");
  if (layers < 1) throw std::invalid_argument("ansatz_seq1d: need layers >= 1");
  Rng rng(seed);
  Circuit circuit;
  circuit.m = m;
  circuit.ansatz = AnsatzKind::Seq1d;
  circuit.layers = layers;
  for (int layer = 0; layer < layers; ++layer)
    for (int q = 0; q + 1 < m; ++q) circuit.gates.push_back(two_qubit_gate(q, q + 1, rng, perturbation));
  return circuit;
}

Circuit ansatz_seq2d(const Layout2D& layout, int layers, std::uint64_t seed, double perturbation) {
  layout.validate();
  if (layers < 1) throw std::invalid_argument("ansatz_seq2d: need layers >= 1");
  int m = layout.site_count();
  Rng rng(seed);
  Circuit circuit;
  circuit.m = m;
  circuit.ansatz = AnsatzKind::Seq2d;
  circuit.layers = layers;
  circuit.layout = layout;
  int max_diag = layout.rows + layout.cols - 2;
  for (int layer = 0; layer < layers; ++layer) {
    for (int diag = 0; diag < max_diag; ++diag) {
      // horizontal gates off this anti-diagonal, top to bottom
      for (int r = 0; r <= std::min(diag, layout.rows - 1); ++r) {
        int c = diag - r;
        if (layout.present(r, c) && layout.present(r, c + 1))
          circuit.gates.push_back(
              two_qubit_gate(layout.qubit_at(r, c), layout.qubit_at(r, c + 1), rng, perturbation));
      }
      // then the vertical ones
      for (int r = 0; r <= std::min(diag, layout.rows - 1); ++r) {
        int c = diag - r;
        if (layout.present(r, c) && layout.present(r + 1, c))
          circuit.gates.push_back(
              two_qubit_gate(layout.qubit_at(r, c), layout.qubit_at(r + 1, c), rng, perturbation));
      }
    }
  }
  return circuit;
}

std::vector<int> mera_layer_sizes(int m) {
  if (m < 2) throw std::invalid_argument("mera_layer_sizes: need m >= 2");
  std::vector<int> sizes{m};
  while (sizes.back() > 2) sizes.push_back((sizes.back() + 1) / 2);
  std::reverse(sizes.begin(), sizes.end());
  return sizes;
}

Circuit ansatz_mera(int m, std::uint64_t seed, double perturbation) {
  if (m < 2) throw std::invalid_argument("ansatz_mera: need m >= 2");
  Rng rng(seed);
  Circuit circuit;
  circuit.m = m;
  circuit.ansatz = AnsatzKind::Mera;
  circuit.layers = int(mera_layer_sizes(m).size());

  // coarse layers live on every other physical qubit of the finer layer
  std::vector<std::vector<int>> layer_qubits;
  std::vector<int> fine(m);
  for (int q = 0; q < m; ++q) fine[q] = q;
  layer_qubits.push_back(fine);
  while (int(layer_qubits.back().size()) > 2) {
    const auto& prev = layer_qubits.back();
    std::vector<int> coarse;
    for (std::size_t i = 0; i < prev.size(); i += 2) coarse.push_back(prev[i]);
    layer_qubits.push_back(coarse);
  }
  std::reverse(layer_qubits.begin(), layer_qubits.end());

  // root unitary on the two coarsest qubits
  circuit.gates.push_back(
      two_qubit_gate(layer_qubits[0][0], layer_qubits[0][1], rng, perturbation));

  for (std::size_t t = 1; t < layer_qubits.size(); ++t) {
    const auto& q = layer_qubits[t];
    int s = int(q.size());
    bool odd = s % 2 != 0;
    int cells = odd ? (s - 1) / 2 : s / 2;
    // isometries insert the fresh in-between qubits
    for (int i = 0; i < cells; ++i)
      circuit.gates.push_back(two_qubit_gate(q[2 * i], q[2 * i + 1], rng, perturbation));
    // disentanglers between neighboring cells; even layers wrap around,
    // odd layers couple the unpaired last qubit and skip the first qubit
    if (odd) {
      for (int i = 0; i < cells; ++i)
        circuit.gates.push_back(two_qubit_gate(q[2 * i + 1], q[2 * i + 2], rng, perturbation));
    } else {
      for (int i = 0; i + 1 < cells; ++i)
        circuit.gates.push_back(two_qubit_gate(q[2 * i + 1], q[2 * i + 2], rng, perturbation));
      if (cells > 1)
        circuit.gates.push_back(two_qubit_gate(q[s - 1], q[0], rng, perturbation));
    }
  }
  return circuit;
}

namespace {

struct GateIndexer {
  std::int64_t target_mask = 0;
  std::vector<std::int64_t> offsets;  // local basis value -> amplitude offset

  GateIndexer(int m, const Gate& gate) {
    int k = gate.arity();
    std::vector<int> shifts(k);
    for (int i = 0; i < k; ++i) shifts[i] = m - 1 - gate.targets[i];
    for (int s : shifts) target_mask |= std::int64_t{1} << s;
    offsets.resize(pow2(k));
    for (std::int64_t l = 0; l < pow2(k); ++l) {
      std::int64_t off = 0;
      for (int i = 0; i < k; ++i)
        if ((l >> (k - 1 - i)) & 1) off |= std::int64_t{1} << shifts[i];
      offsets[l] = off;
    }
  }
};

template <typename MatrixAccess>
void apply_gate_matrix(VectorXcd& amps, int m, const Gate& gate, MatrixAccess entry) {
  GateIndexer idx(m, gate);
  std::int64_t local_dim = std::int64_t(idx.offsets.size());
  std::int64_t dim = amps.size();
  std::vector<cxd> in(local_dim), out(local_dim);
  for (std::int64_t base = 0; base < dim; ++base) {
    if (base & idx.target_mask) continue;  // group representatives only
    for (std::int64_t l = 0; l < local_dim; ++l) in[l] = amps[base | idx.offsets[l]];
    for (std::int64_t r = 0; r < local_dim; ++r) {
      cxd acc = 0.0;
      for (std::int64_t c = 0; c < local_dim; ++c) acc += entry(r, c) * in[c];
      out[r] = acc;
    }
    for (std::int64_t l = 0; l < local_dim; ++l) amps[base | idx.offsets[l]] = out[l];
  }
}

}  // namespace

void apply_gate(VectorXcd& amps, int m, const Gate& gate) {
  apply_gate_matrix(amps, m, gate, [&](std::int64_t r, std::int64_t c) { return gate.matrix(r, c); });
}

void apply_gate_adjoint(VectorXcd& amps, int m, const Gate& gate) {
  apply_gate_matrix(amps, m, gate,
                    [&](std::int64_t r, std::int64_t c) { return std::conj(gate.matrix(c, r)); });
}

MatrixXcd gate_environment(const VectorXcd& bra, const VectorXcd& ket, int m, const Gate& gate) {
  GateIndexer idx(m, gate);
  std::int64_t local_dim = std::int64_t(idx.offsets.size());
  MatrixXcd env = MatrixXcd::Zero(local_dim, local_dim);
  for (std::int64_t base = 0; base < bra.size(); ++base) {
    if (base & idx.target_mask) continue;
    for (std::int64_t k = 0; k < local_dim; ++k) {
      cxd b = std::conj(bra[base | idx.offsets[k]]);
      for (std::int64_t l = 0; l < local_dim; ++l) env(k, l) += b * ket[base | idx.offsets[l]];
    }
  }
  return env;
}

StateVector apply_circuit(const Circuit& circuit) {
  circuit.validate();
  VectorXcd amps = VectorXcd::Zero(pow2(circuit.m));
  amps[0] = 1.0;
  for (const auto& gate : circuit.gates) apply_gate(amps, circuit.m, gate);
  amps /= amps.norm();
  return StateVector(circuit.m, std::move(amps));
}

std::int64_t param_count(const Circuit& circuit) {
  if (circuit.ansatz == AnsatzKind::Unknown)
    throw std::invalid_argument("param_count: unknown ansatz kind");
  std::vector<bool> touched(circuit.m, false);
  std::int64_t total = 0;
  for (const auto& gate : circuit.gates) {
    int fresh = 0;
    for (int t : gate.targets) {
      if (!touched[t]) ++fresh;
      touched[t] = true;
    }
    // isometry W in C^{dim x p} with p = 2^{arity - fresh} constrained columns
    std::int64_t dim = pow2(gate.arity());
    std::int64_t p = pow2(gate.arity() - fresh);
    total += 2 * dim * p - p * p;
  }
  return total;
}

}  // namespace qpix
