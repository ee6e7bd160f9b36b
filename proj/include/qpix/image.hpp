// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "qpix/common.hpp"

namespace qpix {

// Square grayscale image with side 2^n and pixel values in [0, 1].
// pixels(b, a): row index b is the y-coordinate, column index a the
// x-coordinate.
struct ImageGrid {
  int n = 0;
  MatrixXd pixels;

  ImageGrid() = default;
  ImageGrid(int n_, MatrixXd pixels_);

  std::int64_t side() const { return pow2(n); }
  void validate() const;
};

// Decodes a PNG or binary PGM (P5) file, converts to grayscale by the
// unweighted channel mean, takes the largest centered square section and
// resizes it to 2^n_target x 2^n_target with bilinear interpolation.
// 8-bit samples map to [0, 1] as x / 255 (16-bit as x / 65535).
ImageGrid load_grid(const std::filesystem::path& path, int n_target);

// Keeps indices (2^levels * a, 2^levels * b), halving the resolution
// `levels` times.
ImageGrid downsample(const ImageGrid& grid, int levels);

// Centered 2^n_out square, offset (2^n - 2^n_out) / 2 in both axes.
ImageGrid crop_center(const ImageGrid& grid, int n_out);

void save_pgm(const ImageGrid& grid, const std::filesystem::path& path);

// Raw raster helpers shared by load_grid and the tests.
struct RawImage {
  std::int64_t width = 0;
  std::int64_t height = 0;
  MatrixXd gray;  // height x width, values in [0, 1]
};

RawImage decode_image_file(const std::filesystem::path& path);
MatrixXd crop_largest_square(const MatrixXd& gray);
MatrixXd resize_bilinear(const MatrixXd& src, std::int64_t out_h, std::int64_t out_w);

}  // namespace qpix
