// SPDX-License-Identifier: Apache-2.0
#include "qpix/encode.hpp"

#include <cmath>

namespace qpix {

void EncodingSpec::validate() const {
  if (kind == EncodingKind::Neqr && (neqr_bits < 1 || neqr_bits > 8))
    throw std::invalid_argument("EncodingSpec: NEQR q must be in [1, 8]");
}

int EncodingSpec::color_qubits() const {
  switch (kind) {
    case EncodingKind::Amplitude: return 0;
    case EncodingKind::Frqi: return 1;
    case EncodingKind::Neqr: return neqr_bits;
  }
  return 0;
}

int EncodingSpec::qubit_count(int n) const { return 2 * n + color_qubits(); }

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Amplitude: return "amplitude";
    case EncodingKind::Frqi: return "frqi";
    case EncodingKind::Neqr: return "neqr";
  }
  return "?";
}

std::string to_string(Indexing indexing) {
  switch (indexing) {
    case Indexing::RowMajor: return "rowmajor";
    case Indexing::Hierarchical: return "hierarchical";
    case Indexing::Snake: return "snake";
  }
  return "?";
}

EncodingKind encoding_kind_from_string(const std::string& s) {
  if (s == "amplitude") return EncodingKind::Amplitude;
  if (s == "frqi") return EncodingKind::Frqi;
  if (s == "neqr") return EncodingKind::Neqr;
  throw std::invalid_argument("unknown encoding kind: " + s);
}

Indexing indexing_from_string(const std::string& s) {
  if (s == "rowmajor") return Indexing::RowMajor;
  if (s == "hierarchical") return Indexing::Hierarchical;
  if (s == "snake") return Indexing::Snake;
  throw std::invalid_argument("unknown indexing: " + s);
}

std::int64_t pixel_index(std::int64_t a, std::int64_t b, Indexing indexing, int n) {
  std::int64_t side = pow2(n);
  if (a < 0 || a >= side || b < 0 || b >= side)
    throw std::invalid_argument("pixel_index: coordinates out of range");
  switch (indexing) {
    case Indexing::RowMajor:
      return b * side + a;
    case Indexing::Snake: {
      std::int64_t ax = (b & 1) ? side - 1 - a : a;
      return b * side + ax;
    }
    case Indexing::Hierarchical: {
      std::int64_t j = 0;
      for (int bit = n - 1; bit >= 0; --bit) {
        j = (j << 1) | ((b >> bit) & 1);
        j = (j << 1) | ((a >> bit) & 1);
      }
      return j;
    }
  }
  throw std::invalid_argument("pixel_index: unknown indexing");
}

std::int64_t quantize_neqr(double x, int q) {
  double levels = double(pow2(q) - 1);
  std::int64_t v = std::int64_t(std::floor(x * levels + 0.5));  // round half up
  return std::clamp<std::int64_t>(v, 0, pow2(q) - 1);
}

StateVector encode_state(const ImageGrid& grid, const EncodingSpec& spec) {
  spec.validate();
  grid.validate();
  int n = grid.n;
  std::int64_t side = grid.side();
  std::int64_t addresses = side * side;
  int m = spec.qubit_count(n);
  if (m > kMaxDenseQubits) throw std::invalid_argument("encode_state: state too large");
  VectorXcd amps = VectorXcd::Zero(pow2(m));

  switch (spec.kind) {
    case EncodingKind::Amplitude: {
      double norm = grid.pixels.norm();
      if (norm == 0.0)
        throw std::invalid_argument("encode_state: all-zero image has no amplitude encoding");
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a)
          amps[pixel_index(a, b, spec.indexing, n)] = grid.pixels(b, a) / norm;
      break;
    }
    case EncodingKind::Frqi: {
      double scale = 1.0 / double(side);
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a) {
          std::int64_t j = pixel_index(a, b, spec.indexing, n);
          double x = grid.pixels(b, a);
          amps[j] = scale * std::cos(kPi / 2.0 * x);
          amps[addresses + j] = scale * std::sin(kPi / 2.0 * x);
        }
      break;
    }
    case EncodingKind::Neqr: {
      double scale = 1.0 / double(side);
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a) {
          std::int64_t j = pixel_index(a, b, spec.indexing, n);
          std::int64_t v = quantize_neqr(grid.pixels(b, a), spec.neqr_bits);
          amps[v * addresses + j] = scale;
        }
      break;
    }
  }
  amps /= amps.norm();
  return StateVector(m, std::move(amps));
}

ImageGrid decode_image(const StateVector& state, const EncodingSpec& spec, int n) {
  spec.validate();
  if (state.m != spec.qubit_count(n))
    throw std::invalid_argument("decode_image: state dimension does not match spec");
  std::int64_t side = pow2(n);
  std::int64_t addresses = side * side;
  MatrixXd out(side, side);

  switch (spec.kind) {
    case EncodingKind::Amplitude: {
      double peak = 0.0;
      for (std::int64_t j = 0; j < addresses; ++j) peak = std::max(peak, std::abs(state.amps[j]));
      double scale = peak > 0 ? 1.0 / peak : 0.0;
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a)
          out(b, a) = std::abs(state.amps[pixel_index(a, b, spec.indexing, n)]) * scale;
      break;
    }
    case EncodingKind::Frqi: {
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a) {
          std::int64_t j = pixel_index(a, b, spec.indexing, n);
          double c0 = std::abs(state.amps[j]);
          double c1 = std::abs(state.amps[addresses + j]);
          out(b, a) = (2.0 / kPi) * std::atan2(c1, c0);
        }
      break;
    }
    case EncodingKind::Neqr: {
      std::int64_t levels = pow2(spec.neqr_bits);
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a) {
          std::int64_t j = pixel_index(a, b, spec.indexing, n);
          std::int64_t best = 0;
          double best_mag = -1.0;
          for (std::int64_t v = 0; v < levels; ++v) {
            double mag = std::abs(state.amps[v * addresses + j]);
            if (mag > best_mag) {
              best_mag = mag;
              best = v;
            }
          }
          out(b, a) = double(best) / double(levels - 1);
        }
      break;
    }
  }
  out = out.cwiseMax(0.0).cwiseMin(1.0);
  return ImageGrid(n, std::move(out));
}

}  // namespace qpix
