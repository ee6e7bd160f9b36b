// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qpix/encode.hpp"
#include "qpix/optimize.hpp"
#include "qpix/spectral.hpp"

namespace qpix {

// Synthetic input corpus: decay-model spectra with random phases, folded to
// resolution n and Hermitian-symmetrized so the pixels are real, then
// rescaled affinely to [pixel_lo, pixel_hi]. The default mid-contrast range
// mimics photographic histograms; a full-range rescale would drive the FRQI
// color rotation far into its nonlinear regime, unlike any natural corpus.
struct SyntheticSpec {
  enum class Kind { Decay, HardCutoff };
  Kind kind = Kind::Decay;
  DecayModel model;
  std::int64_t cutoff_lambda = 2;  // hard-cutoff masters
  std::int64_t master_side = 512;
  int count = 20;
  std::uint64_t seed = 1;
  double pixel_lo = 0.2;
  double pixel_hi = 0.8;
};

ImageGrid synthetic_image(const SyntheticSpec& spec, int image_index, int n);

// Inputs: either a directory / list of image files or a synthetic corpus.
struct InputSet {
  std::vector<std::filesystem::path> files;
  std::optional<SyntheticSpec> synthetic;

  int item_count() const;
  std::string item_id(int index) const;
  ImageGrid load(int index, int n) const;
  // Multi-resolution protocol: synthetic corpora fold their master spectrum
  // at each resolution; files are loaded once at n_max and halved down to n
  // by retaining every other row and column.
  ImageGrid load_at(int index, int n, int n_max) const;
};

std::vector<std::filesystem::path> collect_image_files(const std::filesystem::path& dir);

struct CompressJob {
  InputSet inputs;
  std::vector<EncodingSpec> encodings;
  std::vector<int> n_list;
  std::vector<std::int64_t> chi_list;
  int jobs = 1;
};

struct CompressRow {
  std::string image_id;
  std::string encoding;
  std::string indexing;
  int n = 0;
  std::int64_t chi = 0;
  double infidelity = 0.0;
  double two_norm = 0.0;
  double max_entropy = 0.0;
};

struct BoundJob {
  std::vector<DecayModel> models;
  std::int64_t master_side = 512;
  std::uint64_t seed = 1;
  std::vector<int> n_list;
  std::vector<std::int64_t> lambda_list;
  int jobs = 1;
};

struct BoundRow {
  std::string model;
  double C = 0.0, alpha = 0.0, beta = 0.0;
  int n = 0;
  std::int64_t lambda = 0;
  std::int64_t chi = 0;
  double bound = 0.0;
  double fourier_error = 0.0;
  double svd_error = 0.0;
};

struct AnsatzChoice {
  AnsatzKind kind = AnsatzKind::Seq1d;
  int layers = 1;
};

struct OptimizeJob {
  InputSet inputs;
  EncodingSpec encoding;
  int n = 5;
  std::vector<AnsatzChoice> ansaetze;
  std::vector<std::uint64_t> seeds;
  OptimizerConfig config;
  int jobs = 1;
  // when set, the best circuit (JSON) and the trace (CSV) of every run are
  // written here
  std::optional<std::filesystem::path> artifact_dir;
};

struct OptimizeRow {
  std::string image_id;
  std::string ansatz;
  int layers = 0;
  std::int64_t params = 0;
  std::uint64_t seed = 0;
  int steps_run = 0;
  double infidelity = 0.0;
};

// Sweeps run their cells in a bounded worker pool; per-item failures are
// reported in the returned count and the sweep continues. Rows come back
// sorted by key so output does not depend on scheduling.
struct SweepResult {
  int failures = 0;
};

SweepResult run_compress(const CompressJob& job, std::vector<CompressRow>& rows);
SweepResult run_bound(const BoundJob& job, std::vector<BoundRow>& rows);
SweepResult run_optimize(const OptimizeJob& job, std::vector<OptimizeRow>& rows);

Circuit build_ansatz(const AnsatzChoice& choice, int m, std::uint64_t seed);

void write_compress_csv(const std::vector<CompressRow>& rows, const std::filesystem::path& path);
void write_bound_csv(const std::vector<BoundRow>& rows, const std::filesystem::path& path);
void write_optimize_csv(const std::vector<OptimizeRow>& rows, const std::filesystem::path& path);
void write_trace_csv(const OptTrace& trace, const std::filesystem::path& path);

}  // namespace qpix
