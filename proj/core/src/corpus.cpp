#include "sigroi/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include "sigroi/errors.hpp"
#include "sigroi/netpbm.hpp"
#include "sigroi/synth.hpp"

namespace sigroi {
namespace {

bool is_netpbm(const std::filesystem::path& p) {
  const auto ext = p.extension().string();
  return ext == ".ppm" || ext == ".pgm" || ext == ".pbm";
}

CorpusRow summarize_row(const CorpusSource& src, const PipelineResult& result) {
  CorpusRow row;
  row.name = src.name;
  row.status = result.trace.status;
  row.message = result.trace.message;
  std::chrono::nanoseconds total{0};
  for (const auto& stage : result.trace.stages) {
    total += stage.duration;
    row.stage_ms.emplace_back(stage.name, std::chrono::duration<double, std::milli>(stage.duration).count());
  }
  row.total_ms = std::chrono::duration<double, std::milli>(total).count();
  if (result.roi) {
    row.roi_width = result.roi->width();
    row.roi_height = result.roi->height();
    row.ink = result.roi->count_ones();
    row.roi = result.roi;
  }
  return row;
}

// CSV-safe message: commas and newlines replaced.
std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::vector<CorpusSource> directory_sources(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && is_netpbm(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusSource> sources;
  sources.reserve(files.size());
  for (const auto& f : files) sources.push_back({f.filename().string(), [f] { return read_rgb(f); }});
  return sources;
}

std::vector<CorpusSource> generated_sources(std::uint64_t first_seed, std::size_t count) {
  std::vector<CorpusSource> sources;
  sources.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + i;
    sources.push_back({"signature_" + std::to_string(seed), [seed] { return generate_signature(seed); }});
  }
  return sources;
}

std::size_t CorpusReport::errors() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == PipelineStatus::Error; }));
}

std::size_t CorpusReport::warnings() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == PipelineStatus::BlankInput; }));
}

CorpusReport run_corpus(const std::vector<CorpusSource>& sources, const PipelineConfig& cfg,
                        const CorpusOptions& options) {
  cfg.validate();
  CorpusReport report;
  report.rows.resize(sources.size());

  std::mutex sink;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      const CorpusSource& src = sources[i];
      PipelineResult result{std::nullopt, {}, {}};
      try {
        result = run_pipeline(src.load(), cfg);
      } catch (const Error& e) {
        result.trace.status = PipelineStatus::Error;
        result.trace.message = e.what();
      }
      CorpusRow row = summarize_row(src, result);
      std::lock_guard lock(sink);
      report.rows[i] = std::move(row);
      if (options.on_result) options.on_result(i, src, result);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(sources.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (const auto& row : report.rows) {
    for (const auto& [name, ms] : row.stage_ms) {
      auto it = std::find_if(report.stages.begin(), report.stages.end(), [&](const auto& s) { return s.name == name; });
      if (it == report.stages.end()) it = report.stages.insert(report.stages.end(), StageTiming{name});
      ++it->runs;
      it->total_ms += ms;
    }
  }
  return report;
}

void write_corpus_report(std::ostream& out, const CorpusReport& report) {
  out << "name,status,roi_width,roi_height,ink,total_ms,message\n";
  for (const auto& row : report.rows) {
    out << row.name << ',' << to_string(row.status) << ',' << row.roi_width << ',' << row.roi_height << ','
        << row.ink << ',' << row.total_ms << ',' << sanitize(row.message) << '\n';
  }
  out << "# stage,runs,total_ms,mean_ms\n";
  for (const auto& s : report.stages) {
    out << "# " << s.name << ',' << s.runs << ',' << s.total_ms << ',' << s.mean_ms() << '\n';
  }
  out << "# images," << report.rows.size() << ",errors," << report.errors() << ",warnings," << report.warnings()
      << '\n';
}

}  // namespace sigroi
