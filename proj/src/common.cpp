// SPDX-License-Identifier: Apache-2.0
#include "qpix/common.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace qpix {

MatrixXcd random_matrix(Rng& rng, int rows, int cols) {
  MatrixXcd out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = rng.normal_complex();
  return out;
}

MatrixXcd random_near_identity_unitary(Rng& rng, int dim, double eps) {
  if (eps == 0.0) return MatrixXcd::Identity(dim, dim);
  MatrixXcd a = MatrixXcd::Identity(dim, dim) + eps * random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(dim, dim);
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    cxd d = r(i, i);
    double mag = std::abs(d);
    if (mag > 0) q.col(i) *= d / mag;
  }
  return q;
}

double matrix_distance_from_unitary(const MatrixXcd& u) {
  MatrixXcd g = u.adjoint() * u;
  return (g - MatrixXcd::Identity(u.cols(), u.cols())).norm();
}

void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn) {
  if (count <= 0) return;
  int workers = int(std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, count)));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qpix
