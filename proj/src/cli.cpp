#include "qgc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <random>
#include <vector>

#include "qgc/analysis.hpp"
#include "qgc/cipher.hpp"
#include "qgc/error.hpp"
#include "qgc/keyformat.hpp"
#include "qgc/netpbm.hpp"
#include "qgc/random.hpp"
#include "qgc/report.hpp"

namespace qgc::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  std::string key_path;
  std::vector<std::string> inputs;
  std::string out_path;
  std::string pgm_path;
  std::string plot_dir;
  std::string mode;
  std::string format = "text";
  unsigned rounds = 0;  // 0: keep the key's NR
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t trials = 50;
  std::size_t size = 512;
  std::size_t runs = 5;
};

SecretKey load_key(const Config& c) {
  if (c.key_path.empty()) throw UsageError("--key is required");
  SecretKey key = parse_key(read_file(c.key_path));
  if (c.rounds != 0) key.params.rounds = static_cast<std::uint8_t>(c.rounds);
  return key;
}

ImageRGB load_image(const std::string& path) { return ppm_read(read_file(path)); }

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(c.out_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
}

void write_plot_file(const Config& c, const char* name, const std::string& text) {
  if (c.plot_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(c.plot_dir, ec);
  if (ec) throw IoError("cannot create plot-data directory " + c.plot_dir);
  write_file_atomic(fs::path(c.plot_dir) / name,
                    std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

int cmd_keygen(const Config& c, std::ostream& out) {
  if (c.out_path.empty()) throw UsageError("--out is required");
  const std::uint64_t seed = c.seed_given ? c.seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
  const SecretKey key = generate_key(seed, c.rounds == 0 ? 2 : c.rounds);
  write_file_atomic(c.out_path, serialize_key(key));
  if (!c.pgm_path.empty()) write_file_atomic(c.pgm_path, qg_to_pgm(key));
  out << "wrote " << c.out_path << " (" << kKeyFileSize << " bytes)\n";
  return kOk;
}

int cmd_crypt(const Config& c, bool encrypting) {
  if (c.inputs.size() != 1) throw UsageError("exactly one --in image is required");
  if (c.out_path.empty()) throw UsageError("--out is required");
  const SecretKey key = load_key(c);
  const ImageRGB img = load_image(c.inputs.front());
  const ImageRGB result = encrypting ? encrypt(img, key) : decrypt(img, key);
  write_file_atomic(c.out_path, ppm_write(result));
  return kOk;
}

int cmd_key_info(const Config& c, std::ostream& out) {
  const SecretKey key = load_key(c);
  const KeyParameters& p = key.params;
  const KeyReport report = validate_key(key);
  out.precision(17);
  out << "x0     = " << p.x0 << "   (0, 2pi)\n"
      << "y0     = " << p.y0 << "   (0, 2pi)\n"
      << "K      = " << p.k << "   (> 18)\n"
      << "NS     = " << p.ns << "   (> 100 recommended)\n"
      << "NR     = " << int{p.rounds} << "   (1..16)\n"
      << "seed1  = " << int{p.seed1} << "   (0..255)\n"
      << "seed2  = " << int{p.seed2} << "   (0..255)\n"
      << "quasigroup order " << key.quasigroup.order() << '\n'
      << "Latin square: " << (report.ok() ? "valid" : "INVALID") << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  return report.ok() ? kOk : kValidation;
}

int cmd_analyze(const Config& c, std::ostream& out) {
  const bool csv = c.format == "csv";
  auto need_inputs = [&](std::size_t n) {
    if (c.inputs.size() != n) {
      throw UsageError("mode " + c.mode + " needs " + std::to_string(n) + " --in image(s)");
    }
  };
  MetricReport report;
  if (c.mode == "entropy") {
    need_inputs(1);
    const ImageRGB img = load_image(c.inputs[0]);
    report.entropy = channel_entropies(img);
    write_plot_file(c, "histogram.csv", histogram_csv(img));
  } else if (c.mode == "adjacent") {
    need_inputs(1);
    const ImageRGB img = load_image(c.inputs[0]);
    report.adjacent = adjacent_correlations(img);
    write_plot_file(c, "adjacent_pairs.csv", adjacent_pairs_csv(img, 3000, c.seed));
  } else if (c.mode == "corr" || c.mode == "npcr-uaci" || c.mode == "mi") {
    need_inputs(2);
    const ImageRGB a = load_image(c.inputs[0]);
    const ImageRGB b = load_image(c.inputs[1]);
    if (a.height != b.height || a.width != b.width) {
      throw ValidationError("images differ in size");
    }
    if (c.mode == "corr") {
      report.correlation = channel_correlations(a, b);
    } else if (c.mode == "mi") {
      report.mutual_information = mutual_information(a, b);
    } else {
      report.npcr = npcr(a, b);
      report.uaci = uaci(a, b);
    }
  } else if (c.mode == "key-sensitivity") {
    need_inputs(1);
    const SecretKey key = load_key(c);
    const auto r = key_sensitivity_suite(load_image(c.inputs[0]), key);
    emit(c, csv ? format_sensitivity_csv(r) : format_sensitivity_text(r), out);
    return kOk;
  } else if (c.mode == "differential") {
    need_inputs(1);
    if (c.trials == 0) throw UsageError("--trials must be at least 1");
    const SecretKey key = load_key(c);
    const auto r = differential_suite(load_image(c.inputs[0]), key, c.trials, c.seed);
    write_plot_file(c, "differential.csv", format_differential_csv(r));
    emit(c, csv ? format_differential_csv(r) : format_differential_text(r), out);
    return kOk;
  } else {
    throw UsageError("unknown analyze mode: " + c.mode);
  }
  emit(c, csv ? format_metric_csv(report) : format_metric_text(report), out);
  return kOk;
}

int cmd_bench(const Config& c, std::ostream& out) {
  SecretKey key = c.key_path.empty() ? generate_key(c.seed, c.rounds == 0 ? 2 : c.rounds) : load_key(c);
  if (c.size == 0 || c.runs == 0) throw UsageError("--size and --runs must be positive");
  SeededRng rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  ImageRGB img(c.size, c.size);
  for (auto& b : img.data) b = static_cast<std::uint8_t>(rng.below(256));

  using clock = std::chrono::steady_clock;
  std::vector<double> enc, dec;
  for (std::size_t r = 0; r < c.runs; ++r) {
    auto t0 = clock::now();
    ImageRGB e = encrypt(img, key);
    auto t1 = clock::now();
    ImageRGB d = decrypt(e, key);
    auto t2 = clock::now();
    if (d != img) throw Error("benchmark round trip failed");
    enc.push_back(std::chrono::duration<double>(t1 - t0).count());
    dec.push_back(std::chrono::duration<double>(t2 - t1).count());
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  const double bytes = static_cast<double>(img.data.size());
  out << "image " << c.size << "x" << c.size << ", NR=" << int{key.params.rounds} << ", runs " << c.runs << '\n';
  out << "encrypt median " << median(enc) * 1e3 << " ms  (" << bytes / median(enc) / 1e6 << " MB/s)\n";
  out << "decrypt median " << median(dec) * 1e3 << " ms  (" << bytes / median(dec) / 1e6 << " MB/s)\n";
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasigroup substitution / standard-map permutation image cipher"};
  app.require_subcommand(1);
  Config c;

  auto* keygen = app.add_subcommand("keygen", "Generate a key file");
  keygen->add_option("--out", c.out_path, "Key file to write")->required();
  keygen->add_option("--seed", c.seed, "64-bit generator seed (random if omitted)");
  keygen->add_option("--rounds", c.rounds, "Number of rounds NR")->check(CLI::Range(1, 16));
  keygen->add_option("--export-pgm", c.pgm_path, "Also write the quasigroup as a 256x256 PGM");

  auto add_crypt = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--key", c.key_path, "Key file")->required();
    sub->add_option("--in", c.inputs, "Input PPM (P6)")->required();
    sub->add_option("--out", c.out_path, "Output PPM")->required();
    sub->add_option("--rounds", c.rounds, "Override the key's NR")->check(CLI::Range(1, 16));
    return sub;
  };
  auto* enc = add_crypt("encrypt", "Encrypt a PPM image");
  auto* dec = add_crypt("decrypt", "Decrypt a PPM image");

  auto* info = app.add_subcommand("key-info", "Print and validate a key file");
  info->add_option("--key", c.key_path, "Key file")->required();

  auto* analyze = app.add_subcommand("analyze", "Statistical and differential analysis");
  analyze->add_option("--mode", c.mode, "Analysis mode")
      ->required()
      ->check(CLI::IsMember({"entropy", "corr", "adjacent", "npcr-uaci", "mi", "key-sensitivity", "differential"}));
  analyze->add_option("--in", c.inputs, "Input PPM image(s)")->required();
  analyze->add_option("--key", c.key_path, "Key file (key-sensitivity, differential)");
  analyze->add_option("--trials", c.trials, "Differential trials");
  analyze->add_option("--seed", c.seed, "Seed for pixel selection and sampling");
  analyze->add_option("--rounds", c.rounds, "Override the key's NR")->check(CLI::Range(1, 16));
  analyze->add_option("--out", c.out_path, "Write the report here instead of stdout");
  analyze->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
  analyze->add_option("--plot-data", c.plot_dir, "Directory for plot-ready CSV columns");

  auto* bench = app.add_subcommand("bench", "Measure encrypt/decrypt throughput");
  bench->add_option("--key", c.key_path, "Key file (generated from --seed if omitted)");
  bench->add_option("--seed", c.seed, "Seed for the key and test image");
  bench->add_option("--rounds", c.rounds, "Number of rounds NR")->check(CLI::Range(1, 16));
  bench->add_option("--size", c.size, "Square image side in pixels");
  bench->add_option("--runs", c.runs, "Repetitions");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.seed_given = keygen->count("--seed") > 0;

  try {
    if (*keygen) return cmd_keygen(c, out);
    if (*enc) return cmd_crypt(c, true);
    if (*dec) return cmd_crypt(c, false);
    if (*info) return cmd_key_info(c, out);
    if (*analyze) return cmd_analyze(c, out);
    if (*bench) return cmd_bench(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const KeyFormatError& e) {
    err << "key format error: " << e.what() << '\n';
    return kKeyFormat;
  } catch (const ImageFormatError& e) {
    err << "image format error: " << e.what() << '\n';
    return kImageFormat;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}

}  // namespace qgc::cli
