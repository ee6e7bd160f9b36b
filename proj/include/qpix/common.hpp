// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qpix {

using cxd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Dense state vectors above this qubit count are refused (1 GiB of
// complex doubles at m = 26).
inline constexpr int kMaxDenseQubits = 26;

inline std::int64_t pow2(int k) { return std::int64_t{1} << k; }

inline bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

inline int int_log2(std::int64_t v) {
  if (!is_power_of_two(v)) throw std::invalid_argument("not a power of two: " + std::to_string(v));
  int k = 0;
  while ((std::int64_t{1} << k) < v) ++k;
  return k;
}

// Deterministic RNG used throughout; mt19937_64 has a standardized output
// sequence, and Box-Muller is spelled out so normal draws do not depend on
// the standard library's unspecified normal_distribution algorithm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {
    // 53-bit mantissa uniform in [0, 1)
    return double(gen_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  cxd normal_complex() { return cxd(normal(), normal()); }

  std::uint64_t integer() { return gen_(); }

  // derive an independent stream, e.g. one per sweep item
  Rng fork(std::uint64_t salt) {
    std::uint64_t s = gen_() ^ (0x9e3779b97f4a7c15ull * (salt + 1));
    return Rng(s);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

MatrixXcd random_matrix(Rng& rng, int rows, int cols);

// Unitary close to the identity: qr_retract(I + eps * Z) with Z ~ complex
// Gaussian. eps = 0 returns the exact identity.
MatrixXcd random_near_identity_unitary(Rng& rng, int dim, double eps);

double matrix_distance_from_unitary(const MatrixXcd& u);

// Runs fn(i) for i in [0, count) on at most `jobs` threads. fn must be
// thread-safe with respect to distinct i.
void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn);

}  // namespace qpix
