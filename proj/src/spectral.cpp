// SPDX-License-Identifier: Apache-2.0
//
// 2-D DFT machinery with signed centered frequencies, spectrum truncation,
// the spectrum-to-MPS construction, alias folding of master coefficient
// arrays, the closed-form discarded-weight bounds for exponentially and
// algebraically decaying spectra, and the DCT-I/DCT-II mirrored-array
// equivalences.
#include "qpix/spectral.hpp"

#include <cmath>

namespace qpix {

Spectrum::Spectrum(int n_, MatrixXcd coeffs_) : n(n_), coeffs(std::move(coeffs_)) {
  if (n < 1) throw std::invalid_argument("Spectrum: n must be >= 1");
  if (coeffs.rows() != side() || coeffs.cols() != side())
    throw std::invalid_argument("Spectrum: coefficient array must be 2^n x 2^n");
}

cxd Spectrum::at_freq(std::int64_t p, std::int64_t q) const {
  return coeffs(q - freq_min(), p - freq_min());
}

cxd& Spectrum::at_freq(std::int64_t p, std::int64_t q) {
  return coeffs(q - freq_min(), p - freq_min());
}

void TruncationSpec::validate(int n) const {
  if (lambda < 0) throw std::invalid_argument("TruncationSpec: Lambda must be >= 0");
  if (chi() > pow2(n)) throw std::invalid_argument("TruncationSpec: 2 Lambda + 1 exceeds 2^n");
}

void DecayModel::validate() const {
  if (C <= 0.0) throw std::invalid_argument("DecayModel: C must be positive");
  if (kind == DecayKind::Exponential) {
    if (alpha <= 0.0 || beta <= 0.0)
      throw std::invalid_argument("DecayModel: exponential decay needs alpha, beta > 0");
  } else {
    if (alpha <= 1.0 || beta <= 1.0)
      throw std::invalid_argument("DecayModel: algebraic decay needs alpha, beta > 1");
  }
}

double DecayModel::envelope(std::int64_t k, std::int64_t l) const {
  double ak = double(std::llabs(k));
  double al = double(std::llabs(l));
  if (kind == DecayKind::Exponential) return C * std::exp(-alpha * ak) * std::exp(-beta * al);
  return C * std::pow(ak + 1.0, -alpha) * std::pow(al + 1.0, -beta);
}

namespace {

// columns are the centered frequencies: W(x, fi) = e^{i 2 pi (fi - N/2) x / N}
MatrixXcd phase_matrix(std::int64_t side) {
  MatrixXcd w(side, side);
  for (std::int64_t x = 0; x < side; ++x)
    for (std::int64_t fi = 0; fi < side; ++fi) {
      double angle = 2.0 * kPi * double(fi - side / 2) * double(x) / double(side);
      w(x, fi) = cxd(std::cos(angle), std::sin(angle));
    }
  return w;
}

}  // namespace

Spectrum dft2(const MatrixXcd& pixels) {
  std::int64_t side = pixels.rows();
  if (side != pixels.cols() || !is_power_of_two(side))
    throw std::invalid_argument("dft2: need a square power-of-two array");
  int n = int_log2(side);
  MatrixXcd w = phase_matrix(side);
  MatrixXcd coeffs = (w.adjoint() * pixels * w.conjugate()) / double(side * side);
  return Spectrum(n, std::move(coeffs));
}

Spectrum dft2(const ImageGrid& grid) { return dft2(MatrixXcd(grid.pixels.cast<cxd>())); }

MatrixXcd idft2(const Spectrum& spec) {
  MatrixXcd w = phase_matrix(spec.side());
  return w * spec.coeffs * w.transpose();
}

std::pair<Spectrum, double> truncate_spectrum(const Spectrum& spec, const TruncationSpec& trunc) {
  trunc.validate(spec.n);
  Spectrum out = spec;
  double discarded = 0.0;
  std::int64_t lo = spec.freq_min();
  for (std::int64_t qi = 0; qi < spec.side(); ++qi)
    for (std::int64_t pi = 0; pi < spec.side(); ++pi) {
      std::int64_t p = pi + lo, q = qi + lo;
      if (std::llabs(p) > trunc.lambda || std::llabs(q) > trunc.lambda) {
        discarded += std::norm(out.coeffs(qi, pi));
        out.coeffs(qi, pi) = 0.0;
      }
    }
  return {std::move(out), discarded};
}

double spectrum_weight_inside(const Spectrum& spec, std::int64_t lambda) {
  double weight = 0.0;
  std::int64_t lo = spec.freq_min();
  for (std::int64_t qi = 0; qi < spec.side(); ++qi)
    for (std::int64_t pi = 0; pi < spec.side(); ++pi)
      if (std::llabs(pi + lo) <= lambda && std::llabs(qi + lo) <= lambda)
        weight += std::norm(spec.coeffs(qi, pi));
  return weight;
}

Mps spectrum_to_mps(const Spectrum& spec) {
  int n = spec.n;
  std::int64_t lo = spec.freq_min();
  std::vector<std::int64_t> qs, ps;  // active signed frequencies
  for (std::int64_t qi = 0; qi < spec.side(); ++qi)
    for (std::int64_t pi = 0; pi < spec.side(); ++pi)
      if (spec.coeffs(qi, pi) != cxd(0.0, 0.0)) {
        qs.push_back(qi + lo);
        ps.push_back(pi + lo);
      }
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (qs.empty()) throw std::invalid_argument("spectrum_to_mps: empty spectrum");
  std::int64_t chi_l = std::int64_t(qs.size());
  std::int64_t chi_r = std::int64_t(ps.size());

  auto plane_phase = [](std::int64_t freq, int sigma, int scale) {
    // e^{i 2 pi freq sigma / 2^{scale+1}}
    double angle = 2.0 * kPi * double(freq) * double(sigma) / double(pow2(scale + 1));
    return cxd(std::cos(angle), std::sin(angle));
  };

  Mps mps;
  mps.tensors.resize(2 * n);

  // y register: row of phases, then diagonal plane waves
  for (int sigma = 0; sigma < 2; ++sigma) {
    mps.tensors[0][sigma] = MatrixXcd::Zero(1, chi_l);
    for (std::int64_t a = 0; a < chi_l; ++a)
      mps.tensors[0][sigma](0, a) = plane_phase(qs[a], sigma, 0);
  }
  for (int j = 1; j < n; ++j)
    for (int sigma = 0; sigma < 2; ++sigma) {
      mps.tensors[j][sigma] = MatrixXcd::Zero(chi_l, chi_l);
      for (std::int64_t a = 0; a < chi_l; ++a)
        mps.tensors[j][sigma](a, a) = plane_phase(qs[a], sigma, j);
    }

  // coefficient matrix connecting the two registers
  MatrixXcd center(chi_l, chi_r);
  for (std::int64_t a = 0; a < chi_l; ++a)
    for (std::int64_t b = 0; b < chi_r; ++b)
      center(a, b) = spec.coeffs(qs[a] - lo, ps[b] - lo);

  // x register with the center matrix absorbed into its first site
  for (int j = 0; j < n; ++j) {
    int site = n + j;
    std::int64_t cols = j == n - 1 ? 1 : chi_r;
    for (int sigma = 0; sigma < 2; ++sigma) {
      MatrixXcd diag = MatrixXcd::Zero(chi_r, cols);
      for (std::int64_t b = 0; b < chi_r; ++b) diag(b, cols == 1 ? 0 : b) = plane_phase(ps[b], sigma, j);
      mps.tensors[site][sigma] = j == 0 ? MatrixXcd(center * diag) : std::move(diag);
    }
  }
  mps.validate();
  return mps;
}

cxd MasterSpectrum::at_freq(std::int64_t k, std::int64_t l) const {
  return coeffs(l - freq_min(), k - freq_min());
}

namespace {

void symmetrize_centered(MatrixXcd& coeffs) {
  std::int64_t side = coeffs.rows();
  for (std::int64_t li = 0; li < side; ++li)
    for (std::int64_t ki = 0; ki < side; ++ki) {
      std::int64_t lm = (side - li) % side;
      std::int64_t km = (side - ki) % side;
      if (std::make_pair(li, ki) > std::make_pair(lm, km)) continue;
      cxd mean = 0.5 * (coeffs(li, ki) + std::conj(coeffs(lm, km)));
      coeffs(li, ki) = mean;
      coeffs(lm, km) = std::conj(mean);
    }
}

}  // namespace

MasterSpectrum master_from_model(const DecayModel& model, std::int64_t side, std::uint64_t seed,
                                 bool with_phases, bool hermitian) {
  model.validate();
  if (side < 2 || side % 2 != 0) throw std::invalid_argument("master_from_model: side must be even");
  Rng rng(seed);
  MasterSpectrum master;
  master.side = side;
  master.coeffs.resize(side, side);
  std::int64_t lo = -(side / 2);
  for (std::int64_t li = 0; li < side; ++li)
    for (std::int64_t ki = 0; ki < side; ++ki) {
      double env = model.envelope(ki + lo, li + lo);
      cxd phase = 1.0;
      if (with_phases) {
        double x = rng.normal();
        phase = cxd(std::cos(kPi * x), std::sin(kPi * x));
      }
      master.coeffs(li, ki) = env * phase;
    }
  if (hermitian) {
    // the -side/2 row and column have no mirror partner on the grid
    master.coeffs.row(0).setZero();
    master.coeffs.col(0).setZero();
    symmetrize_centered(master.coeffs);
  }
  return master;
}

MasterSpectrum master_hard_cutoff(std::int64_t lambda, std::int64_t side, std::uint64_t seed,
                                  bool hermitian) {
  if (side < 2 || side % 2 != 0) throw std::invalid_argument("master_hard_cutoff: side must be even");
  if (2 * lambda + 1 > side) throw std::invalid_argument("master_hard_cutoff: cutoff exceeds side");
  Rng rng(seed);
  MasterSpectrum master;
  master.side = side;
  master.coeffs = MatrixXcd::Zero(side, side);
  std::int64_t c = side / 2;
  for (std::int64_t l = -lambda; l <= lambda; ++l)
    for (std::int64_t k = -lambda; k <= lambda; ++k)
      master.coeffs(c + l, c + k) = rng.normal_complex();
  if (hermitian) symmetrize_centered(master.coeffs);
  return master;
}

Spectrum alias_fold(const MasterSpectrum& master, int n) {
  std::int64_t target = pow2(n);
  if (master.side < 2 * target)
    throw std::invalid_argument("alias_fold: master side must be >= 2 * 2^n");
  std::int64_t mlo = master.freq_min();
  std::int64_t mhi = master.side / 2 - 1;
  Spectrum out(n, MatrixXcd::Zero(target, target));
  std::int64_t lo = out.freq_min();
  for (std::int64_t qi = 0; qi < target; ++qi)
    for (std::int64_t pi = 0; pi < target; ++pi) {
      std::int64_t p = pi + lo, q = qi + lo;
      cxd sum = 0.0;
      std::int64_t k0 = p - ((p - mlo) / target) * target;
      std::int64_t l0 = q - ((q - mlo) / target) * target;
      for (std::int64_t k = k0; k <= mhi; k += target)
        for (std::int64_t l = l0; l <= mhi; l += target) sum += master.at_freq(k, l);
      out.coeffs(qi, pi) = sum;
    }
  return out;
}

void hermitian_symmetrize(Spectrum& spec) { symmetrize_centered(spec.coeffs); }

double hurwitz_zeta(double s, double a) {
  if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta: need s > 1");
  if (a <= 0.0) throw std::invalid_argument("hurwitz_zeta: need a > 0");
  constexpr int kExplicit = 64;
  double sum = 0.0;
  for (int j = 0; j < kExplicit; ++j) sum += std::pow(a + j, -s);
  double x = a + kExplicit;
  // Euler-Maclaurin tail with four Bernoulli corrections
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  static const double bernoulli_over_fact[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                                -1.0 / 1209600.0};
  double rising = s;  // s (s+1) ... (s + 2k - 2)
  for (int k = 1; k <= 4; ++k) {
    sum += bernoulli_over_fact[k - 1] * rising * std::pow(x, -s - 2.0 * k + 1.0);
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
  }
  return sum;
}

double folded_envelope_exp(double alpha, int n, std::int64_t p) {
  double N = double(pow2(n));
  double x = std::exp(-alpha * N);
  double ap = double(std::llabs(p));
  return std::exp(-alpha * ap) +
         (std::exp(alpha * double(p)) + std::exp(-alpha * double(p))) * x / (1.0 - x);
}

double folded_envelope_alg(double alpha, int n, std::int64_t p) {
  double N = double(pow2(n));
  double z = hurwitz_zeta(alpha, 0.5) + hurwitz_zeta(alpha, 1.0);
  return std::pow(double(std::llabs(p)) + 1.0, -alpha) + z / std::pow(N, alpha);
}

namespace {

// sum over all frequencies of the squared folded exponential envelope,
// resolved in closed form; x = e^{-alpha 2^n}
double exp_axis_sum_all(double alpha, double N) {
  double x = std::exp(-alpha * N);
  double coth = 1.0 / std::tanh(alpha);
  double third = x * (1.0 + x) / (1.0 - x);
  return coth * (1.0 + x + third) + 2.0 * N * x / ((1.0 - x) * (1.0 - x));
}

// same sum restricted to |p| <= Lambda, chi = 2 Lambda + 1
double exp_axis_sum_appr(double alpha, double N, double chi) {
  double x = std::exp(-alpha * N);
  double coth = 1.0 / std::tanh(alpha);
  double sinh_a = std::sinh(alpha);
  double head = (coth - std::exp(-alpha * chi) / sinh_a) * (1.0 + 2.0 * x / (1.0 - x));
  // x * sinh(alpha chi), paired to avoid overflow for large alpha chi
  double x_sinh = 0.5 * (std::exp(alpha * (chi - N)) - std::exp(-alpha * (chi + N)));
  double tail = (chi + x_sinh / sinh_a) * 2.0 * x / ((1.0 - x) * (1.0 - x));
  return head + tail;
}

double alg_axis_sum_all(double alpha, double N) {
  double half = N / 2.0;
  double z = hurwitz_zeta(alpha, 0.5) + hurwitz_zeta(alpha, 1.0);
  double na = std::pow(N, alpha);
  double first = 2.0 * hurwitz_zeta(2.0 * alpha, 1.0) - 1.0 + std::pow(half + 1.0, -2.0 * alpha) -
                 2.0 * hurwitz_zeta(2.0 * alpha, half + 1.0);
  double second = 2.0 * (z / na) *
                  (2.0 * hurwitz_zeta(alpha, 1.0) - 1.0 + std::pow(half + 1.0, -alpha) -
                   2.0 * hurwitz_zeta(alpha, half + 1.0));
  double third = z * z * N / (na * na);
  return first + second + third;
}

double alg_axis_sum_appr(double alpha, double N, double lambda) {
  double z = hurwitz_zeta(alpha, 0.5) + hurwitz_zeta(alpha, 1.0);
  double na = std::pow(N, alpha);
  double first = 2.0 * hurwitz_zeta(2.0 * alpha, 1.0) - 2.0 * hurwitz_zeta(2.0 * alpha, lambda + 2.0) -
                 1.0;
  double second = 2.0 * (z / na) *
                  (2.0 * hurwitz_zeta(alpha, 1.0) - 2.0 * hurwitz_zeta(alpha, lambda + 2.0) - 1.0);
  double third = (2.0 * lambda + 1.0) * z * z / (na * na);
  return first + second + third;
}

}  // namespace

double discarded_weight_bound(const DecayModel& model, int n, std::int64_t lambda) {
  model.validate();
  TruncationSpec trunc{lambda};
  trunc.validate(n);
  double N = double(pow2(n));
  double weight;
  if (model.kind == DecayKind::Exponential) {
    double chi = double(trunc.chi());
    weight = exp_axis_sum_all(model.alpha, N) * exp_axis_sum_all(model.beta, N) -
             exp_axis_sum_appr(model.alpha, N, chi) * exp_axis_sum_appr(model.beta, N, chi);
  } else {
    weight = alg_axis_sum_all(model.alpha, N) * alg_axis_sum_all(model.beta, N) -
             alg_axis_sum_appr(model.alpha, N, double(lambda)) *
                 alg_axis_sum_appr(model.beta, N, double(lambda));
  }
  return model.C * model.C * std::max(0.0, weight);
}

double bound_exponential(const DecayModel& model, int n, std::int64_t lambda, double g_norm) {
  if (model.kind != DecayKind::Exponential)
    throw std::invalid_argument("bound_exponential: model is not exponential");
  if (g_norm <= 0.0) throw std::invalid_argument("bound_exponential: g_norm must be positive");
  return 2.0 * std::sqrt(discarded_weight_bound(model, n, lambda)) / g_norm;
}

double bound_algebraic(const DecayModel& model, int n, std::int64_t lambda, double g_norm) {
  if (model.kind != DecayKind::Algebraic)
    throw std::invalid_argument("bound_algebraic: model is not algebraic");
  if (g_norm <= 0.0) throw std::invalid_argument("bound_algebraic: g_norm must be positive");
  return 2.0 * std::sqrt(discarded_weight_bound(model, n, lambda)) / g_norm;
}

MatrixXcd dft2_general(const MatrixXcd& pixels_centered, int sign) {
  std::int64_t side = pixels_centered.rows();
  if (side != pixels_centered.cols() || side % 2 != 0)
    throw std::invalid_argument("dft2_general: need a square even-sided array");
  MatrixXcd e(side, side);
  for (std::int64_t xi = 0; xi < side; ++xi)
    for (std::int64_t fi = 0; fi < side; ++fi) {
      double angle = double(sign) * 2.0 * kPi * double(fi - side / 2) * double(xi - side / 2) /
                     double(side);
      e(xi, fi) = cxd(std::cos(angle), std::sin(angle));
    }
  return (e.transpose() * pixels_centered * e) / double(side * side);
}

DctEquivalence dct_extend_type1(const ImageGrid& grid) {
  std::int64_t N = grid.side();
  std::int64_t M = N - 1;
  if (M < 1) throw std::invalid_argument("dct_extend_type1: grid too small");
  std::int64_t S = 2 * M;

  DctEquivalence out;
  // direct cosine path with the boundary weights 1 / (1 + delta_0 + delta_M)
  MatrixXd weighted = grid.pixels;
  for (std::int64_t i = 0; i < N; ++i) {
    double w = 1.0 + (i == 0 ? 1.0 : 0.0) + (i == M ? 1.0 : 0.0);
    weighted.row(i) /= w;
    weighted.col(i) *= 1.0 / w;
  }
  MatrixXd cosine(N, N);
  for (std::int64_t x = 0; x < N; ++x)
    for (std::int64_t f = 0; f < N; ++f) cosine(x, f) = std::cos(kPi * double(f) * double(x) / double(M));
  out.dct = (cosine.transpose() * weighted * cosine) / double(M * M);

  // mirrored extension h_ab = f_{|a|,|b|} on centered indices -M .. M-1
  out.extended.resize(S, S);
  for (std::int64_t bi = 0; bi < S; ++bi)
    for (std::int64_t ai = 0; ai < S; ++ai) {
      std::int64_t a = std::llabs(ai - M);
      std::int64_t b = std::llabs(bi - M);
      out.extended(bi, ai) = grid.pixels(b, a);
    }
  out.dft_of_ext = dft2_general(out.extended, -1);
  return out;
}

DctEquivalence dct_extend_type2(const ImageGrid& grid) {
  std::int64_t N = grid.side();
  std::int64_t S = 2 * N;

  DctEquivalence out;
  MatrixXd cosine(N, N);
  for (std::int64_t x = 0; x < N; ++x)
    for (std::int64_t f = 0; f < N; ++f)
      cosine(x, f) = std::cos(kPi * double(f) * (double(x) + 0.5) / double(N));
  out.dct = (cosine.transpose() * grid.pixels * cosine) / double(N * N);

  // half-sample mirror h_ab = f_{|a + 1/2| - 1/2, |b + 1/2| - 1/2}
  out.extended.resize(S, S);
  for (std::int64_t bi = 0; bi < S; ++bi)
    for (std::int64_t ai = 0; ai < S; ++ai) {
      std::int64_t a = ai - N;
      std::int64_t b = bi - N;
      std::int64_t am = a >= 0 ? a : -a - 1;
      std::int64_t bm = b >= 0 ? b : -b - 1;
      out.extended(bi, ai) = grid.pixels(bm, am);
    }
  // quarter-wave DFT: phases carry the half-sample shift
  MatrixXcd e(S, S);
  for (std::int64_t xi = 0; xi < S; ++xi)
    for (std::int64_t fi = 0; fi < S; ++fi) {
      double angle = -2.0 * kPi * double(fi - N) * (double(xi - N) + 0.5) / double(S);
      e(xi, fi) = cxd(std::cos(angle), std::sin(angle));
    }
  out.dft_of_ext = (e.transpose() * out.extended * e) / double(S * S);
  return out;
}

MatrixXd idct_type1(const MatrixXd& coeffs) {
  std::int64_t N = coeffs.rows();
  std::int64_t M = N - 1;
  MatrixXd weighted = coeffs;
  for (std::int64_t i = 0; i < N; ++i) {
    double w = 2.0 - (i == 0 ? 1.0 : 0.0) - (i == M ? 1.0 : 0.0);
    weighted.row(i) *= w;
    weighted.col(i) *= w;
  }
  MatrixXd cosine(N, N);
  for (std::int64_t f = 0; f < N; ++f)
    for (std::int64_t x = 0; x < N; ++x) cosine(f, x) = std::cos(kPi * double(f) * double(x) / double(M));
  return cosine.transpose() * weighted * cosine;
}

MatrixXd idct_type2(const MatrixXd& coeffs) {
  std::int64_t N = coeffs.rows();
  MatrixXd weighted = coeffs;
  for (std::int64_t i = 0; i < N; ++i) {
    double w = 2.0 - (i == 0 ? 1.0 : 0.0);
    weighted.row(i) *= w;
    weighted.col(i) *= w;
  }
  MatrixXd cosine(N, N);
  for (std::int64_t f = 0; f < N; ++f)
    for (std::int64_t x = 0; x < N; ++x)
      cosine(f, x) = std::cos(kPi * double(f) * (double(x) + 0.5) / double(N));
  return cosine.transpose() * weighted * cosine;
}

}  // namespace qpix
