// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "qpix/image.hpp"
#include "qpix/state.hpp"

namespace qpix {

enum class EncodingKind { Amplitude, Frqi, Neqr };
enum class Indexing { RowMajor, Hierarchical, Snake };

struct EncodingSpec {
  EncodingKind kind = EncodingKind::Amplitude;
  Indexing indexing = Indexing::RowMajor;
  int neqr_bits = 1;  // q, color-qubit count for NEQR, in [1, 8]

  void validate() const;
  // 2n (amplitude), 2n + 1 (FRQI), 2n + q (NEQR)
  int qubit_count(int n) const;
  int color_qubits() const;
};

std::string to_string(EncodingKind kind);
std::string to_string(Indexing indexing);
EncodingKind encoding_kind_from_string(const std::string& s);
Indexing indexing_from_string(const std::string& s);

// Address integer of pixel (a, b) in [0, 2^2n).
//   RowMajor:     j = b * 2^n + a
//   Hierarchical: y and x bits interleaved most-significant first,
//                 y bit before x bit at each scale
//   Snake:        RowMajor with a -> 2^n - 1 - a on odd rows
std::int64_t pixel_index(std::int64_t a, std::int64_t b, Indexing indexing, int n);

StateVector encode_state(const ImageGrid& grid, const EncodingSpec& spec);

// Best-effort inverse of encode_state for visual inspection. Amplitude
// decoding rescales so the brightest pixel is 1 (normalization loses the
// contrast); FRQI inverts the cos/sin pair; NEQR takes the most likely
// color basis state per address.
ImageGrid decode_image(const StateVector& state, const EncodingSpec& spec, int n);

std::int64_t quantize_neqr(double x, int q);

}  // namespace qpix
