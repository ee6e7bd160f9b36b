// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: encode / decode images, compress sweeps, spectrum
// truncation, bound sweeps, circuit synthesis from MPS, and variational
// circuit optimization. Emits CSV/JSON artifacts for downstream plotting.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "qpix/serialize.hpp"
#include "qpix/sweep.hpp"

namespace fs = std::filesystem;
using namespace qpix;

namespace {

struct CommonOpts {
  std::string out = ".";
  std::uint64_t seed = 1;
  int jobs = 2;
  std::string format = "json";
};

struct InputOpts {
  std::string input;
  std::string synthetic;  // "", "exp", "alg", "cutoff"
  double C = 1.0, alpha = 1.2, beta = 1.2;
  std::int64_t cutoff_lambda = 2;
  std::int64_t master_side = 512;
  int count = 20;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--seed", opts.seed, "random seed");
  cmd->add_option("--jobs", opts.jobs, "worker pool size");
  cmd->add_option("--format", opts.format, "output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_inputs(CLI::App* cmd, InputOpts& opts) {
  cmd->add_option("--input", opts.input, "image file or directory (PNG / binary PGM)");
  cmd->add_option("--synthetic", opts.synthetic, "synthetic corpus kind (exp|alg|cutoff)")
      ->check(CLI::IsMember({"exp", "alg", "cutoff"}));
  cmd->add_option("--C", opts.C, "decay model prefactor");
  cmd->add_option("--alpha", opts.alpha, "decay exponent in x");
  cmd->add_option("--beta", opts.beta, "decay exponent in y");
  cmd->add_option("--cutoff-lambda", opts.cutoff_lambda, "hard-cutoff Lambda");
  cmd->add_option("--master-side", opts.master_side, "master spectrum side");
  cmd->add_option("--count", opts.count, "synthetic corpus size");
}

InputSet make_inputs(const InputOpts& opts, std::uint64_t seed) {
  InputSet inputs;
  if (!opts.synthetic.empty()) {
    SyntheticSpec spec;
    if (opts.synthetic == "cutoff") {
      spec.kind = SyntheticSpec::Kind::HardCutoff;
      spec.cutoff_lambda = opts.cutoff_lambda;
    } else {
      spec.kind = SyntheticSpec::Kind::Decay;
      spec.model.kind = opts.synthetic == "exp" ? DecayKind::Exponential : DecayKind::Algebraic;
      spec.model.C = opts.C;
      spec.model.alpha = opts.alpha;
      spec.model.beta = opts.beta;
    }
    spec.master_side = opts.master_side;
    spec.count = opts.count;
    spec.seed = seed;
    inputs.synthetic = spec;
    return inputs;
  }
  if (opts.input.empty()) throw CLI::ValidationError("--input or --synthetic is required");
  fs::path path(opts.input);
  if (fs::is_directory(path)) {
    inputs.files = collect_image_files(path);
    if (inputs.files.empty()) throw CLI::ValidationError("no PNG/PGM files in " + opts.input);
  } else {
    inputs.files = {path};
  }
  return inputs;
}

EncodingSpec parse_encoding(const std::string& name, const std::string& indexing) {
  EncodingSpec spec;
  spec.indexing = indexing_from_string(indexing);
  if (name.rfind("neqr", 0) == 0) {
    spec.kind = EncodingKind::Neqr;
    spec.neqr_bits = name.size() > 4 ? std::stoi(name.substr(4)) : 1;
  } else {
    spec.kind = encoding_kind_from_string(name);
  }
  spec.validate();
  return spec;
}

std::vector<AnsatzChoice> parse_ansaetze(const std::vector<std::string>& names) {
  std::vector<AnsatzChoice> out;
  for (const auto& name : names) {
    AnsatzChoice choice;
    auto colon = name.find(':');
    std::string kind = colon == std::string::npos ? name : name.substr(0, colon);
    choice.kind = ansatz_kind_from_string(kind);
    if (choice.kind == AnsatzKind::Unknown || choice.kind == AnsatzKind::MpsExact)
      throw CLI::ValidationError("unknown ansatz: " + name);
    choice.layers = colon == std::string::npos ? 1 : std::stoi(name.substr(colon + 1));
    out.push_back(choice);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"quantum image encodings, MPS compression and circuit synthesis"};
  app.require_subcommand(1);

  CommonOpts common;
  InputOpts inputs;

  // encode
  auto* cmd_encode = app.add_subcommand("encode", "encode images as state vectors");
  int n = 5;
  std::string encoding = "amplitude";
  std::string indexing = "rowmajor";
  cmd_encode->add_option("--n", n, "log2 of the image side");
  cmd_encode->add_option("--encoding", encoding, "amplitude|frqi|neqr<q>");
  cmd_encode->add_option("--indexing", indexing, "rowmajor|hierarchical|snake");
  add_inputs(cmd_encode, inputs);
  add_common(cmd_encode, common);

  // decode
  auto* cmd_decode = app.add_subcommand("decode", "decode a state vector back to an image");
  std::string state_file;
  cmd_decode->add_option("--state", state_file, "state vector JSON")->required();
  cmd_decode->add_option("--n", n, "log2 of the image side");
  cmd_decode->add_option("--encoding", encoding, "amplitude|frqi|neqr<q>");
  cmd_decode->add_option("--indexing", indexing, "rowmajor|hierarchical|snake");
  add_common(cmd_decode, common);

  // compress
  auto* cmd_compress = app.add_subcommand("compress", "MPS compression sweep, CSV metrics");
  std::vector<std::string> encodings{"amplitude"};
  std::vector<std::string> indexings{"rowmajor"};
  std::vector<int> n_list{5};
  std::vector<std::int64_t> chi_list{16};
  cmd_compress->add_option("--encodings", encodings, "encoding list");
  cmd_compress->add_option("--indexings", indexings, "indexing list");
  cmd_compress->add_option("--n-list", n_list, "resolutions");
  cmd_compress->add_option("--chi-list", chi_list, "bond dimensions");
  add_inputs(cmd_compress, inputs);
  add_common(cmd_compress, common);

  // spectrum
  auto* cmd_spectrum = app.add_subcommand("spectrum", "DFT of an image, optional truncation");
  std::int64_t lambda = -1;
  cmd_spectrum->add_option("--n", n, "log2 of the image side");
  cmd_spectrum->add_option("--lambda", lambda, "truncation cutoff (optional)");
  add_inputs(cmd_spectrum, inputs);
  add_common(cmd_spectrum, common);

  // bound
  auto* cmd_bound = app.add_subcommand("bound", "error-bound sweep vs actual errors");
  std::string model_name = "exp";
  std::vector<int> bound_n_list{5, 6, 7, 8};
  std::vector<std::int64_t> lambda_list{1, 2, 3, 5, 7, 11, 15, 23, 31};
  cmd_bound->add_option("--model", model_name, "exp|alg")->check(CLI::IsMember({"exp", "alg"}));
  cmd_bound->add_option("--C", inputs.C, "model prefactor");
  cmd_bound->add_option("--alpha", inputs.alpha, "decay exponent in x");
  cmd_bound->add_option("--beta", inputs.beta, "decay exponent in y");
  cmd_bound->add_option("--master-side", inputs.master_side, "master spectrum side");
  cmd_bound->add_option("--n-list", bound_n_list, "resolutions");
  cmd_bound->add_option("--lambda-list", lambda_list, "cutoffs");
  add_common(cmd_bound, common);

  // synth
  auto* cmd_synth = app.add_subcommand("synth", "sequential circuit from the MPS approximation");
  std::int64_t chi = 4;
  cmd_synth->add_option("--n", n, "log2 of the image side");
  cmd_synth->add_option("--encoding", encoding, "amplitude|frqi|neqr<q>");
  cmd_synth->add_option("--indexing", indexing, "rowmajor|hierarchical|snake");
  cmd_synth->add_option("--chi", chi, "bond dimension");
  add_inputs(cmd_synth, inputs);
  add_common(cmd_synth, common);

  // optimize
  auto* cmd_optimize = app.add_subcommand("optimize", "variational circuit compression sweep");
  std::vector<std::string> ansatz_names{"seq1d:1"};
  std::vector<std::uint64_t> seeds{1};
  OptimizerConfig opt_config;
  cmd_optimize->add_option("--n", n, "log2 of the image side");
  cmd_optimize->add_option("--encoding", encoding, "amplitude|frqi|neqr<q>");
  cmd_optimize->add_option("--indexing", indexing, "rowmajor|hierarchical|snake");
  cmd_optimize->add_option("--ansatz", ansatz_names, "ansatz list, e.g. seq1d:2 seq2d:1 mera");
  cmd_optimize->add_option("--seeds", seeds, "optimization seeds");
  cmd_optimize->add_option("--steps", opt_config.steps, "max iterations");
  cmd_optimize->add_option("--lr", opt_config.lr, "step size");
  cmd_optimize->add_option("--beta1", opt_config.beta1, "first-moment decay");
  cmd_optimize->add_option("--beta2", opt_config.beta2, "second-moment decay");
  cmd_optimize->add_option("--eps", opt_config.eps, "moment regularizer");
  cmd_optimize->add_option("--tol", opt_config.tol, "improvement tolerance");
  cmd_optimize->add_option("--patience", opt_config.patience, "early-stop window");
  std::string retraction = "qr";
  cmd_optimize->add_option("--retraction", retraction, "qr|polar")
      ->check(CLI::IsMember({"qr", "polar"}));
  add_inputs(cmd_optimize, inputs);
  add_common(cmd_optimize, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  fs::create_directories(common.out);
  fs::path out_dir(common.out);
  int failures = 0;

  if (cmd_encode->parsed()) {
    InputSet set = make_inputs(inputs, common.seed);
    EncodingSpec spec = parse_encoding(encoding, indexing);
    for (int i = 0; i < set.item_count(); ++i) {
      try {
        StateVector state = encode_state(set.load(i, n), spec);
        write_json(to_json(state), out_dir / (set.item_id(i) + ".state.json"));
      } catch (const std::exception& e) {
        std::cerr << "encode failed for " << set.item_id(i) << ": " << e.what() << "\n";
        ++failures;
      }
    }
  } else if (cmd_decode->parsed()) {
    EncodingSpec spec = parse_encoding(encoding, indexing);
    StateVector state = state_from_json(read_json(state_file));
    ImageGrid grid = decode_image(state, spec, n);
    save_pgm(grid, out_dir / "decoded.pgm");
    if (common.format == "json") write_json(to_json(grid), out_dir / "decoded.image.json");
  } else if (cmd_compress->parsed()) {
    CompressJob job;
    job.inputs = make_inputs(inputs, common.seed);
    for (const auto& name : encodings)
      for (const auto& idx : indexings) job.encodings.push_back(parse_encoding(name, idx));
    job.n_list = n_list;
    job.chi_list = chi_list;
    job.jobs = common.jobs;
    std::vector<CompressRow> rows;
    failures = run_compress(job, rows).failures;
    write_compress_csv(rows, out_dir / "compress.csv");
  } else if (cmd_spectrum->parsed()) {
    InputSet set = make_inputs(inputs, common.seed);
    for (int i = 0; i < set.item_count(); ++i) {
      Spectrum spec = dft2(set.load(i, n));
      if (lambda >= 0) {
        auto [truncated, discarded] = truncate_spectrum(spec, TruncationSpec{lambda});
        std::cout << set.item_id(i) << ": discarded weight " << discarded << "\n";
        spec = std::move(truncated);
      }
      write_json(to_json(spec), out_dir / (set.item_id(i) + ".spectrum.json"));
    }
  } else if (cmd_bound->parsed()) {
    BoundJob job;
    DecayModel model;
    model.kind = model_name == "exp" ? DecayKind::Exponential : DecayKind::Algebraic;
    model.C = inputs.C;
    model.alpha = inputs.alpha;
    model.beta = inputs.beta;
    job.models = {model};
    job.master_side = inputs.master_side;
    job.seed = common.seed;
    job.n_list = bound_n_list;
    job.lambda_list = lambda_list;
    job.jobs = common.jobs;
    std::vector<BoundRow> rows;
    failures = run_bound(job, rows).failures;
    write_bound_csv(rows, out_dir / "bound.csv");
  } else if (cmd_synth->parsed()) {
    InputSet set = make_inputs(inputs, common.seed);
    EncodingSpec spec = parse_encoding(encoding, indexing);
    for (int i = 0; i < set.item_count(); ++i) {
      try {
        StateVector state = encode_state(set.load(i, n), spec);
        auto [mps, report] = mps_from_state(state, chi);
        Circuit circuit = mps_to_circuit(mps);
        double fid = fidelity(apply_circuit(circuit), state);
        std::cout << set.item_id(i) << ": circuit fidelity " << fid << " (MPS infidelity "
                  << report.infidelity << ")\n";
        write_json(to_json(circuit), out_dir / (set.item_id(i) + ".circuit.json"));
      } catch (const std::exception& e) {
        std::cerr << "synth failed for " << set.item_id(i) << ": " << e.what() << "\n";
        ++failures;
      }
    }
  } else if (cmd_optimize->parsed()) {
    OptimizeJob job;
    job.inputs = make_inputs(inputs, common.seed);
    job.encoding = parse_encoding(encoding, indexing);
    job.n = n;
    job.ansaetze = parse_ansaetze(ansatz_names);
    job.seeds = seeds;
    job.config = opt_config;
    job.config.retraction = retraction == "polar" ? Retraction::Polar : Retraction::Qr;
    job.jobs = common.jobs;
    job.artifact_dir = out_dir;
    std::vector<OptimizeRow> rows;
    failures = run_optimize(job, rows).failures;
    write_optimize_csv(rows, out_dir / "optimize.csv");
  }

  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
