// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpix/image.hpp"
#include "qpix/mps.hpp"

namespace qpix {

// 2-D DFT coefficients of a 2^n x 2^n grid with signed frequencies
// p, q in {-2^n/2, ..., 2^n/2 - 1} stored centered: coeffs(qi, pi) holds
// frequency (p, q) = (pi - 2^{n-1}, qi - 2^{n-1}). The convention is
//   f_ab = sum_pq coeffs_pq e^{i 2 pi p a / 2^n} e^{i 2 pi q b / 2^n}.
struct Spectrum {
  int n = 0;
  MatrixXcd coeffs;  // row = q index, column = p index

  Spectrum() = default;
  Spectrum(int n_, MatrixXcd coeffs_);

  std::int64_t side() const { return pow2(n); }
  std::int64_t freq_min() const { return -(side() / 2); }
  cxd at_freq(std::int64_t p, std::int64_t q) const;
  cxd& at_freq(std::int64_t p, std::int64_t q);
  double frobenius_norm() const { return coeffs.norm(); }
};

// Frequency cutoff Lambda with the index sets I_all, I_appr = {-L..L}^2 and
// I_disc = I_all \ I_appr.
struct TruncationSpec {
  std::int64_t lambda = 0;

  std::int64_t chi() const { return 2 * lambda + 1; }
  void validate(int n) const;  // requires 2 Lambda + 1 <= 2^n
};

enum class DecayKind { Exponential, Algebraic };

// Envelope |F(k, l)| <= C e^{-alpha |k|} e^{-beta |l|} (exponential) or
// C (|k|+1)^{-alpha} (|l|+1)^{-beta} (algebraic, alpha, beta > 1).
struct DecayModel {
  DecayKind kind = DecayKind::Exponential;
  double C = 1.0;
  double alpha = 1.0;
  double beta = 1.0;

  void validate() const;
  double envelope(std::int64_t k, std::int64_t l) const;
};

// forward DFT, normalized 2^{-2n} so the Spectrum reconstruction convention
// holds exactly
Spectrum dft2(const ImageGrid& grid);
Spectrum dft2(const MatrixXcd& pixels);

// exact inverse of dft2; complex-valued for non-Hermitian spectra
MatrixXcd idft2(const Spectrum& spec);

// Zeroes every coefficient with |p| > Lambda or |q| > Lambda; also reports
// the discarded weight sum_{I_disc} |f_pq|^2.
std::pair<Spectrum, double> truncate_spectrum(const Spectrum& spec, const TruncationSpec& trunc);

double spectrum_weight_inside(const Spectrum& spec, std::int64_t lambda);

// MPS over 2n qubits whose dense contraction equals the normalized inverse
// DFT of the spectrum. Bond dimension in the y register is the number of
// active q values, in the x register the number of active p values.
Mps spectrum_to_mps(const Spectrum& spec);

// Master array of Fourier-series coefficients F(k, l) on a side x side
// centered grid; finite-resolution spectra arise from it by summing over
// frequency shifts that are multiples of 2^n.
struct MasterSpectrum {
  std::int64_t side = 0;
  MatrixXcd coeffs;  // centered layout like Spectrum

  std::int64_t freq_min() const { return -(side / 2); }
  cxd at_freq(std::int64_t k, std::int64_t l) const;
};

// Coefficients C * envelope * e^{i pi x} with x standard normal per
// coefficient (with_phases), optionally forced Hermitian so pixels are real.
MasterSpectrum master_from_model(const DecayModel& model, std::int64_t side, std::uint64_t seed,
                                 bool with_phases, bool hermitian);

// Hard-cutoff master: random coefficients on |k|, |l| <= lambda, zero outside.
MasterSpectrum master_hard_cutoff(std::int64_t lambda, std::int64_t side, std::uint64_t seed,
                                  bool hermitian);

// f_pq = sum over in-range shifts of master(p + i 2^n, q + j 2^n). Requires
// master side >= 2 * 2^n.
Spectrum alias_fold(const MasterSpectrum& master, int n);

void hermitian_symmetrize(Spectrum& spec);

// Hurwitz zeta, sum_{j >= 0} (j + a)^{-s} for s > 1, a > 0, via 64 explicit
// terms plus an Euler-Maclaurin tail; relative error below 1e-10 over the
// needed range.
double hurwitz_zeta(double s, double a);

// Exact infinite alias fold of the exponential envelope at one frequency:
// e^{-alpha |p|} + (e^{alpha p} + e^{-alpha p}) e^{-alpha 2^n} / (1 - e^{-alpha 2^n}).
double folded_envelope_exp(double alpha, int n, std::int64_t p);

// Loosened finite-n algebraic envelope used by the closed-form bound:
// (|p|+1)^{-alpha} + (zeta(alpha,1/2) + zeta(alpha,1)) / 2^{n alpha}.
double folded_envelope_alg(double alpha, int n, std::int64_t p);

// Closed-form bound on sum_{I_disc} |f_pq|^2 for a model-enveloped master,
// the full finite-n expressions (coth/sinh terms for the exponential decay,
// Hurwitz-zeta terms for the algebraic decay).
double discarded_weight_bound(const DecayModel& model, int n, std::int64_t lambda);

// 2 sqrt(discarded-weight bound) / g_norm with g_norm = ||g||_F of the
// actual truncated spectrum.
double bound_exponential(const DecayModel& model, int n, std::int64_t lambda, double g_norm);
double bound_algebraic(const DecayModel& model, int n, std::int64_t lambda, double g_norm);

// General-size 2-D DFT used by the cosine-transform equivalences and the
// brute-force oracles; out_pq = sum_ab in_ab e^{sign i 2 pi (p a + q b) / S} / S^2
// on an S x S array with centered frequency indexing.
MatrixXcd dft2_general(const MatrixXcd& pixels_centered, int sign);

// Type-I DCT of the grid together with its mirrored 2(2^n - 1)-sided
// extension h_ab = f_{|a|,|b|} and the DFT coefficients of h.
struct DctEquivalence {
  MatrixXd dct;          // direct cosine-sum coefficients, p, q >= 0
  MatrixXcd extended;    // mirrored array h (centered index layout)
  MatrixXcd dft_of_ext;  // DFT coefficients of h (centered layout)
};

DctEquivalence dct_extend_type1(const ImageGrid& grid);

// Type-II DCT with the half-sample mirrored 2^{n+1}-sided extension and the
// quarter-wave DFT of it; the p = -2^n row and q = -2^n column vanish by
// symmetry.
DctEquivalence dct_extend_type2(const ImageGrid& grid);

MatrixXd idct_type1(const MatrixXd& coeffs);
MatrixXd idct_type2(const MatrixXd& coeffs);

}  // namespace qpix
