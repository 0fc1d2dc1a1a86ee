#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigroi/pipeline.hpp"

namespace sigroi {

/// A named corpus entry, loaded on demand.
struct CorpusSource {
  std::string name;
  std::function<RgbImage()> load;
};

/// Every *.ppm, *.pgm and *.pbm file in `dir`, sorted by filename. Gray and
/// binary files are promoted to RGB on load. Throws IoError if `dir` cannot
/// be listed.
std::vector<CorpusSource> directory_sources(const std::filesystem::path& dir);

/// `count` synthetic signatures with seeds first_seed, first_seed + 1, ...
std::vector<CorpusSource> generated_sources(std::uint64_t first_seed, std::size_t count);

struct CorpusRow {
  std::string name;
  PipelineStatus status = PipelineStatus::Ok;
  std::string message;
  int roi_width = 0;
  int roi_height = 0;
  std::size_t ink = 0;
  double total_ms = 0.0;
  std::vector<std::pair<std::string, double>> stage_ms;
  std::optional<BinaryImage> roi;
};

struct StageTiming {
  std::string name;
  std::size_t runs = 0;
  double total_ms = 0.0;
  double mean_ms() const noexcept { return runs ? total_ms / static_cast<double>(runs) : 0.0; }
};

struct CorpusReport {
  std::vector<CorpusRow> rows;  ///< same order as the sources
  std::vector<StageTiming> stages;

  std::size_t errors() const noexcept;
  std::size_t warnings() const noexcept;
};

struct CorpusOptions {
  std::size_t workers = 1;
  /// Called once per image, serialized, in completion order.
  std::function<void(std::size_t index, const CorpusSource&, const PipelineResult&)> on_result;
};

/// Runs the pipeline on every source. A source that fails to load yields an
/// Error row naming the failure; other rows are unaffected.
CorpusReport run_corpus(const std::vector<CorpusSource>& sources, const PipelineConfig& cfg,
                        const CorpusOptions& options = {});

/// CSV rows: name,status,roi_width,roi_height,ink,total_ms,message, followed by
/// a '#'-prefixed per-stage timing summary.
void write_corpus_report(std::ostream& out, const CorpusReport& report);

}  // namespace sigroi
