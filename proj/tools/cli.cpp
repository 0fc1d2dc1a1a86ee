#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "sigroi/color.hpp"
#include "sigroi/corpus.hpp"
#include "sigroi/errors.hpp"
#include "sigroi/netpbm.hpp"
#include "sigroi/roi.hpp"
#include "sigroi/synth.hpp"
#include "sigroi/threshold.hpp"

namespace sigroi::cli {
namespace {

namespace fs = std::filesystem;

// One write per line so concurrent workers never interleave.
void log_line(std::ostream& err, std::string_view level, std::string_view msg) {
  static std::mutex mu;
  std::string line;
  line.reserve(level.size() + msg.size() + 10);
  line.append("sigroi: ").append(level).append(": ").append(msg).push_back('\n');
  std::lock_guard lock(mu);
  err << line << std::flush;
}

Subcommand parse_subcommand(const std::string& name) {
  if (name == "process") return Subcommand::Process;
  if (name == "corpus") return Subcommand::Corpus;
  if (name == "bench") return Subcommand::Bench;
  if (name == "generate") return Subcommand::Generate;
  throw UsageError("unknown subcommand '" + name + "'");
}

void parse_size(const std::string& text, PipelineConfig& cfg) {
  static const std::regex pattern(R"((\d{1,6})x(\d{1,6}))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--size expects ROWSxCOLS, got '" + text + "'");
  cfg.rows = std::stoi(m[1].str());
  cfg.cols = std::stoi(m[2].str());
}

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

class OutputGuard {
 public:
  explicit OutputGuard(std::vector<fs::path> inputs) : inputs_(std::move(inputs)) {}

  // Throws IoError instead of overwriting an input file.
  void write(const AnyImage& img, const fs::path& target) const {
    for (const auto& in : inputs_) {
      if (same_file(in, target)) throw IoError("refusing to overwrite input " + in.string());
    }
    write_image(img, target);
  }

 private:
  std::vector<fs::path> inputs_;
};

void write_stages(const OutputGuard& guard, const StageTrace& trace, const fs::path& dir, const std::string& stem) {
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const auto& st = trace.stages[i];
    guard.write(st.output, dir / (stem + "." + std::to_string(i) + "." + st.name +
                                  std::string(netpbm_extension(st.output))));
  }
}

fs::path roi_path(const fs::path& dir, const std::string& stem) { return dir / (stem + ".roi.pbm"); }

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

int run_process(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  const fs::path input = *inv.input;
  const RgbImage img = read_rgb(input);
  ensure_dir(inv.output);
  const OutputGuard guard({input});
  const std::string stem = input.stem().string();

  const PipelineResult result = run_pipeline(img, inv.pipeline);
  if (inv.emit_stages) write_stages(guard, result.trace, inv.output, stem);

  switch (result.trace.status) {
    case PipelineStatus::BlankInput:
      log_line(err, "warning", "blank_input: " + input.string() + ": " + result.trace.message);
      return kExitOk;
    case PipelineStatus::Error:
      log_line(err, "error", input.string() + ": " + result.trace.message);
      return kExitFailure;
    case PipelineStatus::Ok:
      break;
  }
  const fs::path target = roi_path(inv.output, stem);
  guard.write(*result.roi, target);
  out << input.string() << ": ok, roi " << result.roi->width() << "x" << result.roi->height() << ", ink "
      << result.roi->count_ones() << ", threshold " << result.threshold.level << " -> " << target.string() << "\n";
  return kExitOk;
}

int run_corpus_command(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  std::vector<CorpusSource> sources;
  std::vector<fs::path> inputs;
  if (inv.input) {
    sources = directory_sources(*inv.input);
    for (const auto& s : sources) inputs.push_back(*inv.input / s.name);
  } else {
    sources = generated_sources(inv.seed, *inv.count);
  }
  ensure_dir(inv.output);
  const OutputGuard guard(inputs);

  bool write_failed = false;
  CorpusOptions options;
  options.workers = inv.workers;
  options.on_result = [&](std::size_t, const CorpusSource& src, const PipelineResult& result) {
    const std::string stem = fs::path(src.name).stem().string();
    try {
      if (inv.emit_stages) write_stages(guard, result.trace, inv.output, stem);
      if (result.roi) guard.write(*result.roi, roi_path(inv.output, stem));
    } catch (const Error& e) {
      write_failed = true;
      log_line(err, "error", e.what());
    }
    if (result.trace.status == PipelineStatus::BlankInput) {
      log_line(err, "warning", "blank_input: " + src.name + ": " + result.trace.message);
    } else if (result.trace.status == PipelineStatus::Error) {
      log_line(err, "error", src.name + ": " + result.trace.message);
    }
  };

  const CorpusReport report = run_corpus(sources, inv.pipeline, options);
  const fs::path report_path = inv.output / "corpus_report.csv";
  std::ofstream file(report_path);
  if (!file) throw IoError("cannot open " + report_path.string() + " for writing");
  write_corpus_report(file, report);

  out << "corpus: " << report.rows.size() << " images, " << report.errors() << " errors, " << report.warnings()
      << " warnings -> " << report_path.string() << "\n";
  return report.errors() > 0 || write_failed ? kExitFailure : kExitOk;
}

int run_generate(const CliInvocation& inv, std::ostream& out) {
  ensure_dir(inv.output);
  const std::size_t count = inv.count.value_or(default_count(Subcommand::Generate));
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = inv.seed + i;
    write_image(generate_signature(seed), inv.output / ("signature_" + std::to_string(seed) + ".ppm"));
  }
  out << "generated " << count << " signatures in " << inv.output.string() << "\n";
  return kExitOk;
}

int run_bench(const CliInvocation& inv, std::ostream& out) {
  ensure_dir(inv.output);
  const auto angles = default_angles();
  const auto rows =
      bench_rows(inv.seed, inv.count.value_or(default_count(Subcommand::Bench)), inv.repeats, angles);
  const fs::path report_path = inv.output / "bench_report.csv";
  std::ofstream file(report_path);
  if (!file) throw IoError("cannot open " + report_path.string() + " for writing");
  write_benchmark_report(file, rows, angles.size());
  write_benchmark_report(out, rows, angles.size());
  return kExitOk;
}

volatile std::size_t g_edge_sink = 0;

BinaryImage full_resolution_ink(const RgbImage& img) {
  const GrayImage gray = rgb_to_gray(img);
  return invert(binarize(gray, otsu_threshold(histogram(gray))));
}

}  // namespace

std::size_t default_count(Subcommand command) {
  switch (command) {
    case Subcommand::Bench:
      return 5;
    case Subcommand::Generate:
      return 1;
    default:
      return 0;
  }
}

CliInvocation parse_args(std::span<const std::string> args) {
  CliInvocation inv;
  CLI::App app{"Signature region-of-interest preprocessing", "sigroi"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "Flat key=value file; keys are the long flag names");

  std::string command;
  std::string input;
  std::string output = inv.output.string();
  std::string size = "128x256";
  std::string edge = "canny";
  std::string crop_stage = "post_morphology";
  bool no_morph = false;
  std::optional<double> canny_low;
  std::optional<double> canny_high;
  std::size_t count = 0;

  app.add_option("command", command, "process | corpus | bench | generate")->required();
  auto* in_opt = app.add_option("--in", input, "Input image (process) or directory (corpus)");
  app.add_option("--out", output, "Output directory")->capture_default_str();
  app.add_option("--size", size, "Normalization size ROWSxCOLS")->capture_default_str();
  app.add_option("--edge", edge, "canny | sobel | prewitt | roberts | none")->capture_default_str();
  app.add_option("--crop-stage", crop_stage, "post_morphology | post_edges")->capture_default_str();
  app.add_flag("--no-morph", no_morph, "Skip bridge/remove/skeletonize");
  app.add_flag("--emit-stages", inv.emit_stages, "Write every intermediate stage");
  app.add_option("--seed", inv.seed, "First generator seed")->capture_default_str();
  auto* count_opt = app.add_option("--count", count, "Number of generated signatures")->check(CLI::PositiveNumber);
  app.add_option("--repeats", inv.repeats, "Timed runs per benchmark row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--workers", inv.workers, "Corpus worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--canny-sigma", inv.pipeline.canny.gaussian_sigma, "Canny gaussian sigma")->capture_default_str();
  app.add_option("--canny-low", canny_low, "Canny low threshold (default: 0.4 x Otsu)");
  app.add_option("--canny-high", canny_high, "Canny high threshold (default: Otsu)");

  std::vector<std::string> argv_storage{"sigroi"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  inv.command = parse_subcommand(command);
  if (const auto* cfg = app.get_config_ptr(); cfg && cfg->count() > 0) inv.config = cfg->as<std::string>();
  if (in_opt->count() > 0) inv.input = input;
  if (count_opt->count() > 0) inv.count = count;
  inv.output = output;

  parse_size(size, inv.pipeline);
  inv.pipeline.morphology = !no_morph;
  inv.pipeline.seed = inv.seed;
  inv.pipeline.canny.low = canny_low;
  inv.pipeline.canny.high = canny_high;
  try {
    inv.pipeline.edge = parse_edge_choice(edge);
    inv.pipeline.crop_stage = parse_crop_stage(crop_stage);
    inv.pipeline.validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }

  if (inv.command == Subcommand::Process && !inv.input) throw UsageError("process requires --in");
  if (inv.command == Subcommand::Corpus && !inv.input && !inv.count) throw UsageError("corpus requires --in or --count");
  return inv;
}

std::vector<BenchmarkRow> bench_rows(std::uint64_t seed, std::size_t count, std::size_t repeats,
                                     std::span<const double> angles) {
  std::vector<BenchmarkRow> rows;
  const RgbImage sig = generate_signature(seed);
  const GrayImage gray = rgb_to_gray(sig);
  const BinaryImage ink = full_resolution_ink(sig);
  const std::size_t px = sig.pixel_count();

  rows.push_back({"rgb", px, time_radon(sig, angles, repeats)});
  rows.push_back({"gray", px, time_radon(gray, angles, repeats)});
  rows.push_back({"binary", px, time_radon(ink, angles, repeats, BinaryRadonPath::Float)});
  rows.push_back({"binary_packed", px, time_radon(ink, angles, repeats, BinaryRadonPath::Packed)});

  rows.push_back({"canny", px, measure(repeats, [&] { g_edge_sink = g_edge_sink + canny(gray).count_ones(); })});
  for (auto op : {GradientOperator::Sobel, GradientOperator::Prewitt, GradientOperator::Roberts}) {
    rows.push_back({std::string(to_string(op)), px,
                    measure(repeats, [&] { g_edge_sink = g_edge_sink + detect_edges(gray, op).count_ones(); })});
  }

  for (std::size_t i = 0; i < count; ++i) {
    const BinaryImage original = full_resolution_ink(generate_signature(seed + i));
    const BinaryImage cropped = auto_crop(original);
    rows.push_back({"original", original.pixel_count(), time_radon(original, angles, repeats, BinaryRadonPath::Float)});
    rows.push_back({"cropped", cropped.pixel_count(), time_radon(cropped, angles, repeats, BinaryRadonPath::Float)});
  }
  return rows;
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  switch (inv.command) {
    case Subcommand::Process:
      return run_process(inv, out, err);
    case Subcommand::Corpus:
      return run_corpus_command(inv, out, err);
    case Subcommand::Generate:
      return run_generate(inv, out);
    case Subcommand::Bench:
      return run_bench(inv, out);
  }
  return kExitFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliInvocation inv;
  try {
    inv = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    log_line(err, "usage", e.what());
    log_line(err, "usage", "sigroi {process|corpus|bench|generate} [--in PATH] [--out DIR] [--help]");
    return kExitUsage;
  }
  try {
    return run(inv, out, err);
  } catch (const std::exception& e) {
    log_line(err, "error", e.what());
    return kExitFailure;
  }
}

}  // namespace sigroi::cli
