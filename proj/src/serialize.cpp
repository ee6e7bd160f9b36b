// SPDX-License-Identifier: Apache-2.0
#include "qpix/serialize.hpp"

#include <fstream>

namespace qpix {

namespace {

json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j) { return cxd(j.at(0).get<double>(), j.at(1).get<double>()); }

json matrix_to_flat_pairs(const MatrixXcd& m) {
  json arr = json::array();
  for (std::int64_t r = 0; r < m.rows(); ++r)
    for (std::int64_t c = 0; c < m.cols(); ++c) arr.push_back(complex_to_json(m(r, c)));
  return arr;
}

MatrixXcd matrix_from_flat_pairs(const json& arr, std::int64_t rows, std::int64_t cols) {
  if (std::int64_t(arr.size()) != rows * cols)
    throw std::invalid_argument("json: matrix size mismatch");
  MatrixXcd m(rows, cols);
  std::int64_t i = 0;
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(arr.at(i++));
  return m;
}

}  // namespace

json to_json(const ImageGrid& grid) {
  json j;
  j["n"] = grid.n;
  json pixels = json::array();
  for (std::int64_t b = 0; b < grid.side(); ++b)
    for (std::int64_t a = 0; a < grid.side(); ++a) pixels.push_back(grid.pixels(b, a));
  j["pixels"] = std::move(pixels);
  return j;
}

ImageGrid image_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::int64_t side = pow2(n);
  const json& pixels = j.at("pixels");
  if (std::int64_t(pixels.size()) != side * side)
    throw std::invalid_argument("json: pixel count mismatch");
  MatrixXd m(side, side);
  std::int64_t i = 0;
  for (std::int64_t b = 0; b < side; ++b)
    for (std::int64_t a = 0; a < side; ++a) m(b, a) = pixels.at(i++).get<double>();
  return ImageGrid(n, std::move(m));
}

json to_json(const StateVector& state) {
  json j;
  j["m"] = state.m;
  json amps = json::array();
  for (std::int64_t i = 0; i < state.dim(); ++i) amps.push_back(complex_to_json(state.amps[i]));
  j["amps"] = std::move(amps);
  return j;
}

StateVector state_from_json(const json& j) {
  int m = j.at("m").get<int>();
  const json& amps = j.at("amps");
  if (std::int64_t(amps.size()) != pow2(m)) throw std::invalid_argument("json: amplitude count mismatch");
  VectorXcd v(pow2(m));
  for (std::int64_t i = 0; i < v.size(); ++i) v[i] = complex_from_json(amps.at(i));
  return StateVector(m, std::move(v));
}

json to_json(const Mps& mps) {
  json j;
  j["bonds"] = mps.bonds();
  json tensors = json::array();
  for (const auto& site : mps.tensors) {
    json site_json = json::array();
    for (int sigma = 0; sigma < 2; ++sigma) {
      json block = json::array();
      for (std::int64_t a = 0; a < site[sigma].rows(); ++a) {
        json row = json::array();
        for (std::int64_t b = 0; b < site[sigma].cols(); ++b)
          row.push_back(complex_to_json(site[sigma](a, b)));
        block.push_back(std::move(row));
      }
      site_json.push_back(std::move(block));
    }
    tensors.push_back(std::move(site_json));
  }
  j["tensors"] = std::move(tensors);
  j["canonical"] = mps.canonical == CanonicalFlag::Left    ? "left"
                   : mps.canonical == CanonicalFlag::Right ? "right"
                                                           : "none";
  return j;
}

Mps mps_from_json(const json& j) {
  Mps mps;
  const json& tensors = j.at("tensors");
  std::vector<std::int64_t> bonds = j.at("bonds").get<std::vector<std::int64_t>>();
  if (bonds.size() != tensors.size() + 1) throw std::invalid_argument("json: bond list mismatch");
  mps.tensors.resize(tensors.size());
  for (std::size_t s = 0; s < tensors.size(); ++s) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      const json& block = tensors.at(s).at(sigma);
      MatrixXcd m(bonds[s], bonds[s + 1]);
      for (std::int64_t a = 0; a < m.rows(); ++a)
        for (std::int64_t b = 0; b < m.cols(); ++b)
          m(a, b) = complex_from_json(block.at(a).at(b));
      mps.tensors[s][sigma] = std::move(m);
    }
  }
  std::string canonical = j.value("canonical", "none");
  mps.canonical = canonical == "left"    ? CanonicalFlag::Left
                  : canonical == "right" ? CanonicalFlag::Right
                                         : CanonicalFlag::None;
  mps.validate();
  return mps;
}

json to_json(const Spectrum& spec) {
  json j;
  j["n"] = spec.n;
  j["layout"] = "centered";
  json coeffs = json::array();
  for (std::int64_t qi = 0; qi < spec.side(); ++qi)
    for (std::int64_t pi = 0; pi < spec.side(); ++pi)
      coeffs.push_back(complex_to_json(spec.coeffs(qi, pi)));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Spectrum spectrum_from_json(const json& j) {
  int n = j.at("n").get<int>();
  if (j.value("layout", "centered") != std::string("centered"))
    throw std::invalid_argument("json: unknown spectrum layout");
  std::int64_t side = pow2(n);
  const json& coeffs = j.at("coeffs");
  if (std::int64_t(coeffs.size()) != side * side)
    throw std::invalid_argument("json: coefficient count mismatch");
  MatrixXcd m(side, side);
  std::int64_t i = 0;
  for (std::int64_t qi = 0; qi < side; ++qi)
    for (std::int64_t pi = 0; pi < side; ++pi) m(qi, pi) = complex_from_json(coeffs.at(i++));
  return Spectrum(n, std::move(m));
}

json to_json(const Circuit& circuit) {
  json j;
  j["m"] = circuit.m;
  j["ansatz"] = to_string(circuit.ansatz);
  j["layers"] = circuit.layers;
  if (circuit.layout) {
    json layout;
    layout["rows"] = circuit.layout->rows;
    layout["cols"] = circuit.layout->cols;
    json removed = json::array();
    for (const auto& [r, c] : circuit.layout->removed) removed.push_back(json::array({r, c}));
    layout["removed"] = std::move(removed);
    j["layout"] = std::move(layout);
  }
  json gates = json::array();
  for (const auto& gate : circuit.gates) {
    json g;
    g["targets"] = gate.targets;
    g["matrix"] = matrix_to_flat_pairs(gate.matrix);
    gates.push_back(std::move(g));
  }
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const json& j) {
  Circuit circuit;
  circuit.m = j.at("m").get<int>();
  circuit.ansatz = ansatz_kind_from_string(j.value("ansatz", "unknown"));
  circuit.layers = j.value("layers", 0);
  if (j.contains("layout")) {
    Layout2D layout;
    layout.rows = j["layout"].at("rows").get<int>();
    layout.cols = j["layout"].at("cols").get<int>();
    for (const auto& rc : j["layout"].at("removed"))
      layout.removed.insert({rc.at(0).get<int>(), rc.at(1).get<int>()});
    circuit.layout = layout;
  }
  for (const auto& g : j.at("gates")) {
    Gate gate;
    gate.targets = g.at("targets").get<std::vector<int>>();
    std::int64_t dim = pow2(int(gate.targets.size()));
    gate.matrix = matrix_from_flat_pairs(g.at("matrix"), dim, dim);
    circuit.gates.push_back(std::move(gate));
  }
  circuit.validate();
  return circuit;
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << j.dump(2) << "\n";
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  json j;
  in >> j;
  return j;
}

}  // namespace qpix
