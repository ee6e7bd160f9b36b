// SPDX-License-Identifier: Apache-2.0
#include "qpix/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>

#include "qpix/serialize.hpp"

namespace qpix {

ImageGrid synthetic_image(const SyntheticSpec& spec, int image_index, int n) {
  std::uint64_t seed = spec.seed + 7919ull * std::uint64_t(image_index);
  MasterSpectrum master =
      spec.kind == SyntheticSpec::Kind::Decay
          ? master_from_model(spec.model, spec.master_side, seed, /*with_phases=*/true,
                              /*hermitian=*/true)
          : master_hard_cutoff(spec.cutoff_lambda, spec.master_side, seed, /*hermitian=*/true);
  Spectrum folded = alias_fold(master, n);
  hermitian_symmetrize(folded);
  MatrixXcd complex_pixels = idft2(folded);
  MatrixXd real_pixels = complex_pixels.real();
  double lo = real_pixels.minCoeff();
  double hi = real_pixels.maxCoeff();
  if (hi - lo < 1e-12) {
    real_pixels.setConstant(0.5 * (spec.pixel_lo + spec.pixel_hi));
  } else {
    real_pixels = spec.pixel_lo +
                  (real_pixels.array() - lo) / (hi - lo) * (spec.pixel_hi - spec.pixel_lo);
  }
  return ImageGrid(n, std::move(real_pixels));
}

int InputSet::item_count() const {
  if (synthetic) return synthetic->count;
  return int(files.size());
}

std::string InputSet::item_id(int index) const {
  if (synthetic) return "synthetic-" + std::to_string(index);
  return files[index].filename().string();
}

ImageGrid InputSet::load(int index, int n) const {
  if (synthetic) return synthetic_image(*synthetic, index, n);
  return load_grid(files[index], n);
}

ImageGrid InputSet::load_at(int index, int n, int n_max) const {
  if (synthetic) return synthetic_image(*synthetic, index, n);
  return downsample(load_grid(files[index], n_max), n_max - n);
}

std::vector<std::filesystem::path> collect_image_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".png" || ext == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

namespace {

struct FailureLog {
  std::mutex mutex;
  int count = 0;

  void record(const std::string& what) {
    std::lock_guard<std::mutex> lock(mutex);
    ++count;
    std::cerr << "sweep item failed: " << what << "\n";
  }
};

}  // namespace

SweepResult run_compress(const CompressJob& job, std::vector<CompressRow>& rows) {
  struct Item {
    int input, encoding, n;
  };
  std::vector<Item> items;
  for (int i = 0; i < job.inputs.item_count(); ++i)
    for (std::size_t e = 0; e < job.encodings.size(); ++e)
      for (int n : job.n_list) items.push_back({i, int(e), n});
  if (items.empty()) return {0};

  int n_max = *std::max_element(job.n_list.begin(), job.n_list.end());
  std::vector<std::vector<CompressRow>> partial(items.size());
  FailureLog failures;
  parallel_for(std::int64_t(items.size()), job.jobs, [&](std::int64_t idx) {
    const Item& item = items[idx];
    try {
      const EncodingSpec& enc = job.encodings[item.encoding];
      ImageGrid grid = job.inputs.load_at(item.input, item.n, n_max);
      StateVector state = encode_state(grid, enc);
      double max_entropy = entanglement_profile(state).max_entropy;
      for (std::int64_t chi : job.chi_list) {
        auto [mps, report] = mps_from_state(state, chi);
        CompressRow row;
        row.image_id = job.inputs.item_id(item.input);
        row.encoding = to_string(enc.kind) +
                       (enc.kind == EncodingKind::Neqr ? std::to_string(enc.neqr_bits) : "");
        row.indexing = to_string(enc.indexing);
        row.n = item.n;
        row.chi = chi;
        row.infidelity = report.infidelity;
        row.two_norm = report.two_norm;
        row.max_entropy = max_entropy;
        partial[idx].push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      failures.record(e.what());
    }
  });
  for (auto& p : partial)
    for (auto& row : p) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(), [](const CompressRow& a, const CompressRow& b) {
    return std::tie(a.image_id, a.encoding, a.indexing, a.n, a.chi) <
           std::tie(b.image_id, b.encoding, b.indexing, b.n, b.chi);
  });
  return {failures.count};
}

SweepResult run_bound(const BoundJob& job, std::vector<BoundRow>& rows) {
  struct Item {
    int model, n;
  };
  std::vector<Item> items;
  for (std::size_t mi = 0; mi < job.models.size(); ++mi)
    for (int n : job.n_list) items.push_back({int(mi), n});

  std::vector<std::vector<BoundRow>> partial(items.size());
  FailureLog failures;
  parallel_for(std::int64_t(items.size()), job.jobs, [&](std::int64_t idx) {
    const Item& item = items[idx];
    try {
      const DecayModel& model = job.models[item.model];
      MasterSpectrum master = master_from_model(model, job.master_side,
                                                job.seed + 131ull * std::uint64_t(item.model),
                                                /*with_phases=*/true, /*hermitian=*/false);
      Spectrum folded = alias_fold(master, item.n);
      double full_weight = folded.coeffs.squaredNorm();

      MatrixXcd pixels = idft2(folded);
      VectorXcd amps(pixels.size());
      std::int64_t side = pixels.rows();
      for (std::int64_t b = 0; b < side; ++b)
        for (std::int64_t a = 0; a < side; ++a) amps[b * side + a] = pixels(b, a);
      amps /= amps.norm();
      StateVector state(2 * item.n, std::move(amps));

      for (std::int64_t lambda : job.lambda_list) {
        if (2 * lambda + 1 > pow2(item.n)) continue;
        double inside = spectrum_weight_inside(folded, lambda);
        double g_norm = std::sqrt(inside);
        if (g_norm <= 0.0) continue;
        BoundRow row;
        row.model = model.kind == DecayKind::Exponential ? "exp" : "alg";
        row.C = model.C;
        row.alpha = model.alpha;
        row.beta = model.beta;
        row.n = item.n;
        row.lambda = lambda;
        row.chi = 2 * lambda + 1;
        row.bound = model.kind == DecayKind::Exponential
                        ? bound_exponential(model, item.n, lambda, g_norm)
                        : bound_algebraic(model, item.n, lambda, g_norm);
        // phase-aligned two-norm error of the truncated-spectrum state,
        // computed in Fourier space
        double overlap = inside / (std::sqrt(full_weight) * g_norm);
        row.fourier_error = std::sqrt(std::max(0.0, 2.0 * (1.0 - overlap)));
        auto [mps, report] = mps_from_state(state, 2 * lambda + 1);
        row.svd_error = report.two_norm;
        partial[idx].push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      failures.record(e.what());
    }
  });
  for (auto& p : partial)
    for (auto& row : p) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(), [](const BoundRow& a, const BoundRow& b) {
    return std::tie(a.model, a.alpha, a.beta, a.n, a.lambda) <
           std::tie(b.model, b.alpha, b.beta, b.n, b.lambda);
  });
  return {failures.count};
}

Circuit build_ansatz(const AnsatzChoice& choice, int m, std::uint64_t seed) {
  switch (choice.kind) {
    case AnsatzKind::Seq1d: return ansatz_seq1d(m, choice.layers, seed);
    case AnsatzKind::Seq2d: return ansatz_seq2d(default_layout(m), choice.layers, seed);
    case AnsatzKind::Mera: return ansatz_mera(m, seed);
    default: throw std::invalid_argument("build_ansatz: unsupported ansatz kind");
  }
}

SweepResult run_optimize(const OptimizeJob& job, std::vector<OptimizeRow>& rows) {
  struct Item {
    int input, ansatz;
    std::uint64_t seed;
  };
  std::vector<Item> items;
  for (int i = 0; i < job.inputs.item_count(); ++i)
    for (std::size_t a = 0; a < job.ansaetze.size(); ++a)
      for (std::uint64_t seed : job.seeds) items.push_back({i, int(a), seed});

  std::vector<std::vector<OptimizeRow>> partial(items.size());
  FailureLog failures;
  parallel_for(std::int64_t(items.size()), job.jobs, [&](std::int64_t idx) {
    const Item& item = items[idx];
    try {
      ImageGrid grid = job.inputs.load(item.input, job.n);
      StateVector target = encode_state(grid, job.encoding);
      const AnsatzChoice& choice = job.ansaetze[item.ansatz];
      Circuit ansatz = build_ansatz(choice, target.m, item.seed);
      OptimizerConfig config = job.config;
      config.seed = item.seed;
      auto [best, trace] = optimize(ansatz, target, config);
      if (job.artifact_dir) {
        std::string stem = job.inputs.item_id(item.input) + "." + to_string(choice.kind) + "-" +
                           std::to_string(choice.layers) + ".seed" + std::to_string(item.seed);
        write_json(to_json(best), *job.artifact_dir / (stem + ".circuit.json"));
        write_trace_csv(trace, *job.artifact_dir / (stem + ".trace.csv"));
      }
      OptimizeRow row;
      row.image_id = job.inputs.item_id(item.input);
      row.ansatz = to_string(choice.kind);
      row.layers = choice.layers;
      row.params = param_count(ansatz);
      row.seed = item.seed;
      row.steps_run = int(trace.infidelity.size());
      row.infidelity = trace.best_infidelity;
      partial[idx].push_back(std::move(row));
    } catch (const std::exception& e) {
      failures.record(e.what());
    }
  });
  for (auto& p : partial)
    for (auto& row : p) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(), [](const OptimizeRow& a, const OptimizeRow& b) {
    return std::tie(a.image_id, a.ansatz, a.layers, a.seed) <
           std::tie(b.image_id, b.ansatz, b.layers, b.seed);
  });
  return {failures.count};
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out.precision(17);
  return out;
}

}  // namespace

void write_compress_csv(const std::vector<CompressRow>& rows, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "# qpix compress v1\n";
  out << "image_id,encoding,indexing,n,chi,infidelity,two_norm,max_entropy\n";
  for (const auto& r : rows)
    out << r.image_id << "," << r.encoding << "," << r.indexing << "," << r.n << "," << r.chi << ","
        << r.infidelity << "," << r.two_norm << "," << r.max_entropy << "\n";
}

void write_bound_csv(const std::vector<BoundRow>& rows, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "# qpix bound v1\n";
  out << "model,C,alpha,beta,n,lambda,chi,bound,fourier_error,svd_error\n";
  for (const auto& r : rows)
    out << r.model << "," << r.C << "," << r.alpha << "," << r.beta << "," << r.n << "," << r.lambda
        << "," << r.chi << "," << r.bound << "," << r.fourier_error << "," << r.svd_error << "\n";
}

void write_optimize_csv(const std::vector<OptimizeRow>& rows, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "# qpix optimize v1\n";
  out << "image_id,ansatz,layers,params,seed,steps_run,infidelity\n";
  for (const auto& r : rows)
    out << r.image_id << "," << r.ansatz << "," << r.layers << "," << r.params << "," << r.seed
        << "," << r.steps_run << "," << r.infidelity << "\n";
}

void write_trace_csv(const OptTrace& trace, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "# qpix trace v1\n";
  out << "step,infidelity,best_infidelity\n";
  double best = 2.0;
  for (std::size_t i = 0; i < trace.infidelity.size(); ++i) {
    best = std::min(best, trace.infidelity[i]);
    out << i << "," << trace.infidelity[i] << "," << best << "\n";
  }
}

}  // namespace qpix
