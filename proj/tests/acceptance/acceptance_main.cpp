// Acceptance suite. One line per criterion; exit status is the number of
// failures, capped at 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigroi/sigroi.hpp"

namespace {

using namespace sigroi;
using sigroi::testing::Connectivity;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BinaryImage full_resolution_ink(const RgbImage& img) {
  const GrayImage gray = rgb_to_gray(img);
  return invert(binarize(gray, otsu_threshold(histogram(gray))));
}

void add_peak(Histogram256& h, int centre, int spread, std::uint64_t mass) {
  for (int v = 0; v < 256; ++v) {
    const double z = (v - centre) / static_cast<double>(spread);
    h.counts[static_cast<std::size_t>(v)] += static_cast<std::uint64_t>(std::llround(mass * std::exp(-0.5 * z * z)));
  }
}

Histogram256 bimodal_histogram(std::mt19937_64& rng, int index) {
  std::uniform_int_distribution<int> centre(10, 245);
  std::uniform_int_distribution<int> spread(1, 12);
  std::uniform_int_distribution<std::uint64_t> mass(50, 5000);
  Histogram256 h{};
  add_peak(h, centre(rng), spread(rng), mass(rng));
  add_peak(h, centre(rng), spread(rng), mass(rng));
  // Every fourth case is mirrored about 127.5, which forces exact ties.
  if (index % 4 == 0) {
    for (std::size_t v = 0; v < 128; ++v) {
      const auto s = h.counts[v] + h.counts[255 - v];
      h.counts[v] = s;
      h.counts[255 - v] = s;
    }
  }
  return h;
}

Outcome otsu_oracle() {
  std::mt19937_64 rng(20261015);
  std::vector<Histogram256> cases;
  for (int i = 0; i < 200; ++i) cases.push_back(histogram(sigroi::testing::random_gray(rng, 64, 64)));
  for (int i = 0; i < 20; ++i) cases.push_back(bimodal_histogram(rng, i));

  std::vector<ThresholdResult> expected;
  for (const auto& h : cases) expected.push_back(sigroi::testing::brute_force_otsu(h));

  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ThresholdResult got = otsu_threshold(cases[i]);
    if (got.level != expected[i].level || got.degenerate != expected[i].degenerate) ++mismatches;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << cases.size() << " histograms, " << mismatches << " mismatches, " << elapsed << " s";
  return {mismatches == 0 && elapsed < 1.0, d.str()};
}

// Criteria 2 and 9 share one pair of corpus runs.
struct CorpusRuns {
  std::size_t images = 0;
  std::size_t wrong_size = 0;
  std::size_t errors_first = 0;
  std::size_t errors_second = 0;
  std::size_t differing = 0;
  double first_seconds = 0.0;
};

CorpusRuns run_corpus_twice() {
  CorpusRuns runs;
  const PipelineConfig cfg;
  const auto sources = generated_sources(0, 160);
  runs.images = sources.size();

  CorpusOptions options;
  options.workers = 1;
  options.on_result = [&](std::size_t, const CorpusSource&, const PipelineResult& r) {
    const StageRecord* st = r.trace.find("resize");
    const auto* g = st ? std::get_if<GrayImage>(&st->output) : nullptr;
    if (!g || g->height() != 128 || g->width() != 256) ++runs.wrong_size;
  };

  const auto t0 = Clock::now();
  const CorpusReport first = run_corpus(sources, cfg, options);
  runs.first_seconds = seconds_since(t0);
  const CorpusReport second = run_corpus(sources, cfg);

  runs.errors_first = first.errors();
  runs.errors_second = second.errors();
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    const auto& a = first.rows[i];
    const auto& b = second.rows[i];
    if (a.status != b.status || a.roi != b.roi || a.name != b.name) ++runs.differing;
  }
  return runs;
}

Outcome normalization_size(const CorpusRuns& runs) {
  std::ostringstream d;
  d << runs.images << " images, " << runs.wrong_size << " resize stages not 128x256";
  return {runs.images == 160 && runs.wrong_size == 0, d.str()};
}

Outcome skeleton_safety() {
  const PipelineConfig cfg;
  std::vector<BinaryImage> inputs;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PipelineResult r = run_pipeline(generate_signature(seed), cfg);
    const StageRecord* st = r.trace.find("remove");
    if (st) inputs.push_back(std::get<BinaryImage>(st->output));
    // Full-resolution strokes are several pixels thick.
    inputs.push_back(full_resolution_ink(generate_signature(seed)));
  }

  const auto t0 = Clock::now();
  std::size_t failures = 100 - inputs.size();
  for (const auto& in : inputs) {
    const BinaryImage out = skeletonize(in);
    bool subset = true;
    for (int r = 0; r < in.height() && subset; ++r) {
      for (int c = 0; c < in.width(); ++c) {
        if (out.at(r, c) && !in.at(r, c)) {
          subset = false;
          break;
        }
      }
    }
    const bool same_components = sigroi::testing::count_components(in, 1, Connectivity::Eight) ==
                                 sigroi::testing::count_components(out, 1, Connectivity::Eight);
    const bool idempotent = skeletonize(out) == out;
    if (!(subset && same_components && idempotent)) ++failures;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << inputs.size() << " skeletons, " << failures << " failures, " << elapsed << " s";
  return {failures == 0 && elapsed < 10.0, d.str()};
}

bool border_has_ink(const BinaryImage& img) {
  bool top = false, bottom = false, left = false, right = false;
  for (int c = 0; c < img.width(); ++c) {
    top = top || img.at(0, c);
    bottom = bottom || img.at(img.height() - 1, c);
  }
  for (int r = 0; r < img.height(); ++r) {
    left = left || img.at(r, 0);
    right = right || img.at(r, img.width() - 1);
  }
  return top && bottom && left && right;
}

Outcome crop_correctness() {
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const BinaryImage in = full_resolution_ink(generate_signature(seed));
    const BinaryImage out = auto_crop(in);
    ++checked;
    if (out.count_ones() != in.count_ones() || !border_has_ink(out) || auto_crop(out) != out) ++failures;
  }
  std::ostringstream d;
  d << checked << " crops, " << failures << " failures";
  return {failures == 0, d.str()};
}

Outcome radon_mass() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(8, 96);
  const auto angles = default_angles();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const GrayImage img = sigroi::testing::random_gray(rng, dim(rng), dim(rng));
    double mass = 0.0;
    for (auto v : img.pixels()) mass += v;
    const Sinogram s = radon_transform(img, angles);
    for (std::size_t a = 0; a < angles.size(); ++a) {
      worst = std::max(worst, std::abs(s.column_sum(a) - mass) / mass);
    }
  }
  std::ostringstream d;
  d << "50 images x 180 angles, worst relative error " << worst;
  return {worst <= 1e-6, d.str()};
}

Outcome representation_ordering() {
  const auto angles = default_angles();
  const RgbImage sig = generate_signature(0);
  const GrayImage gray = rgb_to_gray(sig);
  const BinaryImage ink = full_resolution_ink(sig);
  const double rgb = time_radon(sig, angles, kDefaultRepeats).median_ms;
  const double g = time_radon(gray, angles, kDefaultRepeats).median_ms;
  const double b = time_radon(ink, angles, kDefaultRepeats, BinaryRadonPath::Packed).median_ms;
  std::ostringstream d;
  d << "median ms rgb " << rgb << ", gray " << g << ", binary " << b;
  return {rgb > g && g >= b, d.str()};
}

Outcome crop_is_cheaper() {
  const auto angles = default_angles();
  std::size_t failures = 0;
  double worst_ratio = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BinaryImage original = full_resolution_ink(generate_signature(seed));
    const BinaryImage cropped = auto_crop(original);
    const double o = time_radon(original, angles, kDefaultRepeats, BinaryRadonPath::Float).median_ms;
    const double c = time_radon(cropped, angles, kDefaultRepeats, BinaryRadonPath::Float).median_ms;
    worst_ratio = std::max(worst_ratio, c / o);
    if (!(c < o)) ++failures;
  }
  std::ostringstream d;
  d << "20 signatures, " << failures << " not faster, worst cropped/original " << worst_ratio;
  return {failures == 0, d.str()};
}

Outcome edge_ordering() {
  const GrayImage gray = rgb_to_gray(generate_signature(0));
  volatile std::size_t sink = 0;
  const double c = measure(kDefaultRepeats, [&] { sink = sink + canny(gray).count_ones(); }).median_ms;
  std::ostringstream d;
  d << "median ms canny " << c;
  bool pass = true;
  for (auto op : {GradientOperator::Sobel, GradientOperator::Prewitt, GradientOperator::Roberts}) {
    const double t = measure(kDefaultRepeats, [&] { sink = sink + detect_edges(gray, op).count_ones(); }).median_ms;
    d << ", " << to_string(op) << " " << t;
    pass = pass && c > t;
  }
  return {pass, d.str()};
}

Outcome end_to_end(const CorpusRuns& runs) {
  std::ostringstream d;
  d << runs.images << " images, errors " << runs.errors_first << "/" << runs.errors_second << ", " << runs.differing
    << " differing, first run " << runs.first_seconds << " s";
  return {runs.errors_first == 0 && runs.errors_second == 0 && runs.differing == 0 && runs.first_seconds < 60.0,
          d.str()};
}

}  // namespace

int main() {
  const CorpusRuns corpus = run_corpus_twice();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"otsu_oracle_equivalence", otsu_oracle},
      {"normalization_size", [&] { return normalization_size(corpus); }},
      {"skeleton_safety", skeleton_safety},
      {"crop_correctness", crop_correctness},
      {"radon_mass_conservation", radon_mass},
      {"representation_timing_order", representation_ordering},
      {"cropped_radon_faster", crop_is_cheaper},
      {"canny_slowest_edge_operator", edge_ordering},
      {"end_to_end_determinism", [&] { return end_to_end(corpus); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
