// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include <json.hpp>

#include "qpix/circuit.hpp"
#include "qpix/encode.hpp"
#include "qpix/image.hpp"
#include "qpix/mps.hpp"
#include "qpix/spectral.hpp"

namespace qpix {

using nlohmann::json;

// JSON schemas (deterministic ordering everywhere):
//   ImageGrid:   {"n", "pixels": row-major reals}
//   StateVector: {"m", "amps": [[re, im], ...]}
//   Mps:         {"bonds": [chi_0..chi_m],
//                 "tensors": [site][sigma][alpha][beta] = [re, im]}
//   Spectrum:    {"n", "layout": "centered", "coeffs": [[re, im], ...]
//                 row-major over q then p}
//   Circuit:     {"m", "ansatz", "layers", "layout"?,
//                 "gates": [{"targets", "matrix": row-major [re, im] pairs}]}

json to_json(const ImageGrid& grid);
ImageGrid image_from_json(const json& j);

json to_json(const StateVector& state);
StateVector state_from_json(const json& j);

json to_json(const Mps& mps);
Mps mps_from_json(const json& j);

json to_json(const Spectrum& spec);
Spectrum spectrum_from_json(const json& j);

json to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& j);

void write_json(const json& j, const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

}  // namespace qpix
