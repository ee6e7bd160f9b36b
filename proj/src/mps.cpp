// SPDX-License-Identifier: Apache-2.0
#include "qpix/mps.hpp"

#include <Eigen/Eigenvalues>

namespace qpix {

std::vector<std::int64_t> Mps::bonds() const {
  std::vector<std::int64_t> out;
  out.reserve(tensors.size() + 1);
  out.push_back(1);
  for (const auto& t : tensors) out.push_back(t[0].cols());
  return out;
}

std::int64_t Mps::max_bond() const {
  std::int64_t chi = 1;
  for (const auto& t : tensors) chi = std::max<std::int64_t>(chi, t[0].cols());
  return chi;
}

void Mps::validate() const {
  if (tensors.empty()) throw std::invalid_argument("Mps: no tensors");
  std::int64_t bond = 1;
  for (const auto& t : tensors) {
    if (t[0].rows() != t[1].rows() || t[0].cols() != t[1].cols())
      throw std::invalid_argument("Mps: sigma blocks disagree in shape");
    if (t[0].rows() != bond) throw std::invalid_argument("Mps: adjacent bond dimensions mismatch");
    bond = t[0].cols();
  }
  if (bond != 1) throw std::invalid_argument("Mps: last bond must be 1");
  if (canonical == CanonicalFlag::Left) {
    for (const auto& t : tensors) {
      MatrixXcd gram = t[0].adjoint() * t[0] + t[1].adjoint() * t[1];
      if ((gram - MatrixXcd::Identity(gram.rows(), gram.cols())).norm() > 1e-10)
        throw std::invalid_argument("Mps: left-canonical isometry violated");
    }
  }
}

namespace {

// Splits the leading physical index off the columns of r (chi x 2K) and
// attaches it to the rows, giving (2 chi x K) with row index alpha*2+sigma.
MatrixXcd absorb_next_site(const MatrixXcd& r) {
  std::int64_t chi = r.rows();
  std::int64_t cols = r.cols() / 2;
  MatrixXcd out(2 * chi, cols);
  for (std::int64_t alpha = 0; alpha < chi; ++alpha) {
    out.row(2 * alpha) = r.row(alpha).segment(0, cols);
    out.row(2 * alpha + 1) = r.row(alpha).segment(cols, cols);
  }
  return out;
}

}  // namespace

std::pair<Mps, CompressionReport> mps_from_state(const StateVector& state, std::int64_t chi_max) {
  if (chi_max < 1) throw std::invalid_argument("mps_from_state: chi_max must be >= 1");
  int m = state.m;
  Mps mps;
  mps.tensors.resize(m);
  CompressionReport report;
  report.chi_max = chi_max;
  report.discarded_weight.assign(std::size_t(std::max(0, m - 1)), 0.0);

  // remainder starts as the 2 x 2^{m-1} reshape of the amplitudes
  MatrixXcd remainder(2, pow2(m - 1));
  for (int s = 0; s < 2; ++s)
    remainder.row(s) = state.amps.segment(s * pow2(m - 1), pow2(m - 1)).transpose();

  for (int j = 0; j + 1 < m; ++j) {
    std::int64_t rows = remainder.rows();
    std::int64_t cols = remainder.cols();
    std::int64_t keep = std::min({chi_max, rows, cols});

    // Schmidt spectrum at this bond from the Gram matrix; eigenvalues are
    // the squared singular values, which is what the discarded weight needs.
    MatrixXcd gram = remainder * remainder.adjoint();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(gram);
    if (eig.info() != Eigen::Success) throw std::runtime_error("mps_from_state: eigensolver failed");

    // ascending order from Eigen: last `keep` columns are the dominant ones
    double dropped = 0.0;
    for (std::int64_t i = 0; i < rows - keep; ++i) dropped += std::max(0.0, eig.eigenvalues()[i]);
    report.discarded_weight[j] = dropped;

    MatrixXcd basis(rows, keep);
    for (std::int64_t i = 0; i < keep; ++i) basis.col(i) = eig.eigenvectors().col(rows - 1 - i);

    auto& site = mps.tensors[j];
    std::int64_t chi_in = rows / 2;
    site[0].resize(chi_in, keep);
    site[1].resize(chi_in, keep);
    for (std::int64_t alpha = 0; alpha < chi_in; ++alpha) {
      site[0].row(alpha) = basis.row(2 * alpha);
      site[1].row(alpha) = basis.row(2 * alpha + 1);
    }

    remainder = absorb_next_site(basis.adjoint() * remainder);
  }

  // last site: remainder is (2 chi x 1); absorb the residual norm
  double norm = remainder.norm();
  if (norm <= 0.0) throw std::runtime_error("mps_from_state: state truncated to zero");
  remainder /= norm;
  std::int64_t chi_in = remainder.rows() / 2;
  auto& last = mps.tensors[m - 1];
  last[0].resize(chi_in, 1);
  last[1].resize(chi_in, 1);
  for (std::int64_t alpha = 0; alpha < chi_in; ++alpha) {
    last[0](alpha, 0) = remainder(2 * alpha, 0);
    last[1](alpha, 0) = remainder(2 * alpha + 1, 0);
  }
  mps.canonical = CanonicalFlag::Left;

  StateVector approx = mps_to_state(mps);
  report.infidelity = std::max(0.0, 1.0 - fidelity(state, approx));
  report.two_norm = two_norm_distance(state, approx);
  return {std::move(mps), report};
}

StateVector mps_to_state(const Mps& mps) {
  int m = mps.sites();
  if (m > kMaxDenseQubits) throw std::invalid_argument("mps_to_state: too many sites");
  // grow left-to-right: T is (2^j x chi_j), row = basis prefix
  MatrixXcd t = MatrixXcd::Ones(1, 1);
  for (int j = 0; j < m; ++j) {
    std::int64_t rows = t.rows();
    std::int64_t chi_next = mps.tensors[j][0].cols();
    MatrixXcd grown(rows * 2, chi_next);
    MatrixXcd part0 = t * mps.tensors[j][0];
    MatrixXcd part1 = t * mps.tensors[j][1];
    for (std::int64_t r = 0; r < rows; ++r) {
      grown.row(2 * r) = part0.row(r);
      grown.row(2 * r + 1) = part1.row(r);
    }
    t = std::move(grown);
  }
  // row index ends up as sigma_0 ... sigma_{m-1} with sigma_0 most
  // significant, matching the amplitude layout
  VectorXcd amps = t.col(0);
  double norm = amps.norm();
  if (norm <= 0.0) throw std::runtime_error("mps_to_state: zero state");
  amps /= norm;
  return StateVector(m, std::move(amps));
}

EntanglementProfile entanglement_profile(const StateVector& state) {
  int m = state.m;
  EntanglementProfile profile;
  profile.entropies.reserve(m - 1);
  for (int cut = 1; cut < m; ++cut) {
    std::int64_t left = pow2(cut);
    std::int64_t right = pow2(m - cut);
    Eigen::Map<const MatrixXcd> a(state.amps.data(), right, left);  // column-major: (right, left)
    MatrixXcd gram;
    if (left <= right)
      gram = a.adjoint() * a;  // left x left
    else
      gram = a * a.adjoint();  // right x right
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (std::int64_t i = 0; i < eig.eigenvalues().size(); ++i) {
      double p = eig.eigenvalues()[i];
      if (p > 1e-300) s -= p * std::log(p);
    }
    profile.entropies.push_back(std::max(0.0, s));
  }
  profile.max_entropy = 0.0;
  for (double s : profile.entropies) profile.max_entropy = std::max(profile.max_entropy, s);
  return profile;
}

double half_chain_entropy(const StateVector& state) {
  int cut = state.m / 2;
  std::int64_t left = pow2(cut);
  std::int64_t right = pow2(state.m - cut);
  Eigen::Map<const MatrixXcd> a(state.amps.data(), right, left);
  MatrixXcd gram = left <= right ? MatrixXcd(a.adjoint() * a) : MatrixXcd(a * a.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (std::int64_t i = 0; i < eig.eigenvalues().size(); ++i) {
    double p = eig.eigenvalues()[i];
    if (p > 1e-300) s -= p * std::log(p);
  }
  return std::max(0.0, s);
}

Mps random_left_canonical_mps(int m, std::int64_t chi, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_left_canonical_mps: need m >= 1");
  if (chi < 1) throw std::invalid_argument("random_left_canonical_mps: need chi >= 1");
  Rng rng(seed);
  // independent per-site QR blocks, each already a left isometry
  std::vector<std::int64_t> bond(m + 1, 1);
  for (int j = 1; j < m; ++j) bond[j] = std::min({chi, pow2(j), pow2(m - j)});
  Mps mps;
  mps.tensors.resize(m);
  for (int j = m - 1; j >= 0; --j) {
    // stacked (2 chi_j x chi_{j+1}) block with orthonormal columns
    MatrixXcd block = random_matrix(rng, 2 * bond[j], bond[j + 1]);
    Eigen::HouseholderQR<MatrixXcd> qr(block);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(2 * bond[j], bond[j + 1]);
    auto& site = mps.tensors[j];
    site[0].resize(bond[j], bond[j + 1]);
    site[1].resize(bond[j], bond[j + 1]);
    for (std::int64_t alpha = 0; alpha < bond[j]; ++alpha) {
      site[0].row(alpha) = q.row(2 * alpha);
      site[1].row(alpha) = q.row(2 * alpha + 1);
    }
  }
  mps.canonical = CanonicalFlag::Left;
  mps.validate();
  return mps;
}

}  // namespace qpix
