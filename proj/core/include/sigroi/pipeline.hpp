#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigroi/edges.hpp"
#include "sigroi/image.hpp"
#include "sigroi/threshold.hpp"

namespace sigroi {

enum class EdgeChoice { None, Canny, Sobel, Prewitt, Roberts };
enum class CropStage { PostMorphology, PostEdges };

std::string_view to_string(EdgeChoice e) noexcept;
std::string_view to_string(CropStage s) noexcept;
/// Throw ParameterError on unknown names.
EdgeChoice parse_edge_choice(std::string_view name);
CropStage parse_crop_stage(std::string_view name);

struct PipelineConfig {
  int rows = 128;
  int cols = 256;
  EdgeChoice edge = EdgeChoice::Canny;
  CannyParams canny;
  CropStage crop_stage = CropStage::PostMorphology;
  bool morphology = true;
  std::uint64_t seed = 0;

  /// Throws ParameterError for targets below 8x8, invalid canny params, or
  /// crop_stage = post_edges with edge = none.
  void validate() const;
};

struct StageRecord {
  std::string name;
  AnyImage output;
  std::chrono::nanoseconds duration{0};
};

enum class PipelineStatus { Ok, BlankInput, Error };
std::string_view to_string(PipelineStatus s) noexcept;

struct StageTrace {
  std::vector<StageRecord> stages;  ///< in execution order
  PipelineStatus status = PipelineStatus::Ok;
  std::string message;

  const StageRecord* find(std::string_view name) const noexcept;
};

struct PipelineResult {
  std::optional<BinaryImage> roi;  ///< set iff trace.status is Ok
  StageTrace trace;
  ThresholdResult threshold;
};

/// Runs the preprocessing chain on one scan:
///
///   input, gray, resize, binarize, invert,
///   [bridge, remove, skeletonize], [edges], crop
///
/// Bracketed stages depend on the config. Edge detectors see the ink=1 image
/// as ink = 255 intensity. The crop stage crops the post-morphology image or
/// the edge map per crop_stage.
///
/// A single-intensity scan (degenerate Otsu) or an empty crop source ends
/// with status BlankInput; library errors end with status Error. The trace
/// keeps every stage that completed. Invalid configs throw ParameterError.
PipelineResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg);

}  // namespace sigroi
