// SPDX-License-Identifier: Apache-2.0
#include "qpix/image.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>

#include <png.h>

namespace qpix {

ImageGrid::ImageGrid(int n_, MatrixXd pixels_) : n(n_), pixels(std::move(pixels_)) { validate(); }

void ImageGrid::validate() const {
  if (n < 1) throw std::invalid_argument("ImageGrid: n must be >= 1");
  std::int64_t s = pow2(n);
  if (pixels.rows() != s || pixels.cols() != s)
    throw std::invalid_argument("ImageGrid: side must be exactly 2^n");
  if ((pixels.array() < -1e-12).any() || (pixels.array() > 1.0 + 1e-12).any())
    throw std::invalid_argument("ImageGrid: pixel values must lie in [0, 1]");
}

namespace {

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadCloser() { png_destroy_read_struct(&png, &info, nullptr); }
};

RawImage decode_png(std::FILE* fp, const std::filesystem::path& path) {
  PngReadCloser ctx;
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw std::runtime_error("libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw std::runtime_error("libpng info init failed");
  if (setjmp(png_jmpbuf(ctx.png)))
    throw std::runtime_error("unreadable PNG file: " + path.string());

  png_init_io(ctx.png, fp);
  png_read_info(ctx.png, ctx.info);

  png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
  png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
  int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
  int color_type = png_get_color_type(ctx.png, ctx.info);
  if (width == 0 || height == 0) throw std::runtime_error("zero-size image: " + path.string());

  // normalize to 8- or 16-bit RGB without alpha
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
  if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(ctx.png);
  png_set_strip_alpha(ctx.png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(ctx.png);
  png_read_update_info(ctx.png, ctx.info);

  std::size_t row_bytes = png_get_rowbytes(ctx.png, ctx.info);
  std::vector<png_byte> data(row_bytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = data.data() + y * row_bytes;
  // re-arm the error jump so a decode failure lands after the allocations
  if (setjmp(png_jmpbuf(ctx.png)))
    throw std::runtime_error("corrupt PNG data: " + path.string());
  png_read_image(ctx.png, rows.data());
  const int depth = png_get_bit_depth(ctx.png, ctx.info);

  RawImage out;
  out.width = width;
  out.height = height;
  out.gray.resize(height, width);
  double maxval = depth == 16 ? 65535.0 : 255.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    const png_byte* row = rows[y];
    for (png_uint_32 x = 0; x < width; ++x) {
      double sum = 0.0;
      for (int c = 0; c < 3; ++c) {
        if (depth == 16) {
          std::size_t off = (std::size_t(x) * 3 + c) * 2;
          sum += double((unsigned(row[off]) << 8) | row[off + 1]);
        } else {
          sum += double(row[std::size_t(x) * 3 + c]);
        }
      }
      out.gray(y, x) = sum / (3.0 * maxval);
    }
  }
  return out;
}

int pgm_next_value(std::istream& in) {
  // skips whitespace and '#' comments
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value = -1;
  in >> value;
  if (!in) throw std::runtime_error("malformed PGM header");
  return value;
}

RawImage decode_pgm(std::istream& in, const std::filesystem::path& path) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5')
    throw std::runtime_error("not a binary PGM (P5) file: " + path.string());
  std::int64_t width = pgm_next_value(in);
  std::int64_t height = pgm_next_value(in);
  std::int64_t maxval = pgm_next_value(in);
  if (width <= 0 || height <= 0) throw std::runtime_error("zero-size image: " + path.string());
  if (maxval <= 0 || maxval > 65535) throw std::runtime_error("bad PGM maxval");
  in.get();  // single whitespace after maxval

  RawImage out;
  out.width = width;
  out.height = height;
  out.gray.resize(height, width);
  int bytes = maxval > 255 ? 2 : 1;
  std::vector<unsigned char> row(std::size_t(width) * bytes);
  for (std::int64_t y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), std::streamsize(row.size()));
    if (!in) throw std::runtime_error("truncated PGM data: " + path.string());
    for (std::int64_t x = 0; x < width; ++x) {
      double v = bytes == 2 ? double((unsigned(row[2 * x]) << 8) | row[2 * x + 1]) : double(row[x]);
      out.gray(y, x) = v / double(maxval);
    }
  }
  return out;
}

}  // namespace

RawImage decode_image_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("unreadable file: " + path.string());
  unsigned char magic[8] = {};
  in.read(reinterpret_cast<char*>(magic), 8);
  std::size_t got = std::size_t(in.gcount());
  in.clear();
  in.seekg(0);
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (got >= 8 && std::equal(png_sig, png_sig + 8, magic)) {
    in.close();
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.c_str(), "rb"),
                                                       &std::fclose);
    if (!fp) throw std::runtime_error("unreadable file: " + path.string());
    return decode_png(fp.get(), path);
  }
  if (got >= 2 && magic[0] == 'P' && magic[1] == '5') return decode_pgm(in, path);
  throw std::runtime_error("unsupported image format (need PNG or binary PGM): " + path.string());
}

MatrixXd crop_largest_square(const MatrixXd& gray) {
  std::int64_t h = gray.rows(), w = gray.cols();
  std::int64_t side = std::min(h, w);
  std::int64_t y0 = (h - side) / 2;
  std::int64_t x0 = (w - side) / 2;
  return gray.block(y0, x0, side, side);
}

MatrixXd resize_bilinear(const MatrixXd& src, std::int64_t out_h, std::int64_t out_w) {
  std::int64_t in_h = src.rows(), in_w = src.cols();
  if (in_h == out_h && in_w == out_w) return src;
  MatrixXd out(out_h, out_w);
  auto sample_axis = [](std::int64_t i, std::int64_t out_s, std::int64_t in_s, std::int64_t& lo,
                        std::int64_t& hi, double& frac) {
    // pixel-center alignment, edge clamped
    double x = (double(i) + 0.5) * double(in_s) / double(out_s) - 0.5;
    x = std::clamp(x, 0.0, double(in_s - 1));
    lo = std::int64_t(std::floor(x));
    hi = std::min(lo + 1, in_s - 1);
    frac = x - double(lo);
  };
  for (std::int64_t y = 0; y < out_h; ++y) {
    std::int64_t y_lo, y_hi;
    double fy;
    sample_axis(y, out_h, in_h, y_lo, y_hi, fy);
    for (std::int64_t x = 0; x < out_w; ++x) {
      std::int64_t x_lo, x_hi;
      double fx;
      sample_axis(x, out_w, in_w, x_lo, x_hi, fx);
      double top = (1.0 - fx) * src(y_lo, x_lo) + fx * src(y_lo, x_hi);
      double bot = (1.0 - fx) * src(y_hi, x_lo) + fx * src(y_hi, x_hi);
      out(y, x) = (1.0 - fy) * top + fy * bot;
    }
  }
  return out;
}

ImageGrid load_grid(const std::filesystem::path& path, int n_target) {
  if (n_target < 1) throw std::invalid_argument("load_grid: n_target must be >= 1");
  RawImage raw = decode_image_file(path);
  MatrixXd square = crop_largest_square(raw.gray);
  std::int64_t side = pow2(n_target);
  MatrixXd resized = resize_bilinear(square, side, side);
  resized = resized.cwiseMax(0.0).cwiseMin(1.0);
  return ImageGrid(n_target, std::move(resized));
}

ImageGrid downsample(const ImageGrid& grid, int levels) {
  if (levels < 0) throw std::invalid_argument("downsample: levels must be >= 0");
  if (levels > grid.n) throw std::invalid_argument("downsample: levels exceeds n");
  if (levels == 0) return grid;
  std::int64_t step = pow2(levels);
  std::int64_t side = pow2(grid.n - levels);
  MatrixXd out(side, side);
  for (std::int64_t b = 0; b < side; ++b)
    for (std::int64_t a = 0; a < side; ++a) out(b, a) = grid.pixels(b * step, a * step);
  return ImageGrid(grid.n - levels, std::move(out));
}

ImageGrid crop_center(const ImageGrid& grid, int n_out) {
  if (n_out < 1) throw std::invalid_argument("crop_center: n_out must be >= 1");
  if (n_out > grid.n) throw std::invalid_argument("crop_center: n_out exceeds n");
  std::int64_t side = pow2(n_out);
  std::int64_t offset = (grid.side() - side) / 2;
  MatrixXd out = grid.pixels.block(offset, offset, side, side);
  return ImageGrid(n_out, std::move(out));
}

void save_pgm(const ImageGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  std::int64_t side = grid.side();
  out << "P5\n" << side << " " << side << "\n255\n";
  for (std::int64_t b = 0; b < side; ++b) {
    for (std::int64_t a = 0; a < side; ++a) {
      double v = std::clamp(grid.pixels(b, a), 0.0, 1.0);
      out.put(char(std::lround(v * 255.0)));
    }
  }
}

}  // namespace qpix
