#include "sigroi/pipeline.hpp"

#include <string>

#include "sigroi/color.hpp"
#include "sigroi/errors.hpp"
#include "sigroi/morph.hpp"
#include "sigroi/resize.hpp"
#include "sigroi/roi.hpp"

namespace sigroi {

std::string_view to_string(EdgeChoice e) noexcept {
  switch (e) {
    case EdgeChoice::None:
      return "none";
    case EdgeChoice::Canny:
      return "canny";
    case EdgeChoice::Sobel:
      return "sobel";
    case EdgeChoice::Prewitt:
      return "prewitt";
    case EdgeChoice::Roberts:
      return "roberts";
  }
  return "unknown";
}

std::string_view to_string(CropStage s) noexcept {
  return s == CropStage::PostMorphology ? "post_morphology" : "post_edges";
}

std::string_view to_string(PipelineStatus s) noexcept {
  switch (s) {
    case PipelineStatus::Ok:
      return "ok";
    case PipelineStatus::BlankInput:
      return "blank_input";
    case PipelineStatus::Error:
      return "error";
  }
  return "unknown";
}

EdgeChoice parse_edge_choice(std::string_view name) {
  for (auto e : {EdgeChoice::None, EdgeChoice::Canny, EdgeChoice::Sobel, EdgeChoice::Prewitt, EdgeChoice::Roberts}) {
    if (name == to_string(e)) return e;
  }
  throw ParameterError("unknown edge operator '" + std::string(name) + "'");
}

CropStage parse_crop_stage(std::string_view name) {
  for (auto s : {CropStage::PostMorphology, CropStage::PostEdges}) {
    if (name == to_string(s)) return s;
  }
  throw ParameterError("unknown crop stage '" + std::string(name) + "'");
}

void PipelineConfig::validate() const {
  if (rows < 8 || cols < 8) {
    throw ParameterError("target size must be at least 8x8, got " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  canny.validate();
  if (crop_stage == CropStage::PostEdges && edge == EdgeChoice::None) {
    throw ParameterError("crop stage post_edges needs an edge operator");
  }
}

const StageRecord* StageTrace::find(std::string_view name) const noexcept {
  for (const auto& s : stages) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

class Tracer {
 public:
  explicit Tracer(StageTrace& trace) : trace_(trace) {}

  template <typename Fn>
  const auto& run(std::string name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto out = fn();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    using T = decltype(out);
    trace_.stages.push_back({std::move(name), AnyImage(std::move(out)),
                             std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)});
    return std::get<T>(trace_.stages.back().output);
  }

 private:
  StageTrace& trace_;
};

BinaryImage run_edges(const BinaryImage& ink, const PipelineConfig& cfg) {
  const GrayImage gray = to_gray(ink);
  switch (cfg.edge) {
    case EdgeChoice::Canny:
      return canny(gray, cfg.canny);
    case EdgeChoice::Sobel:
      return detect_edges(gray, GradientOperator::Sobel);
    case EdgeChoice::Prewitt:
      return detect_edges(gray, GradientOperator::Prewitt);
    case EdgeChoice::Roberts:
      return detect_edges(gray, GradientOperator::Roberts);
    case EdgeChoice::None:
      break;
  }
  return ink;
}

}  // namespace

PipelineResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg) {
  cfg.validate();
  PipelineResult result{std::nullopt, {}, {}};
  StageTrace& trace = result.trace;
  // References returned by the tracer die with the next stage, so keep copies.
  Tracer tracer(trace);
  try {
    tracer.run("input", [&] { return img; });
    const GrayImage gray = tracer.run("gray", [&] { return rgb_to_gray(img); });
    const GrayImage sized = tracer.run("resize", [&] { return resize_bilinear(gray, cfg.rows, cfg.cols); });

    result.threshold = otsu_threshold(histogram(sized));
    const BinaryImage binary = tracer.run("binarize", [&] { return binarize(sized, result.threshold); });
    if (result.threshold.degenerate) {
      trace.status = PipelineStatus::BlankInput;
      trace.message = "single-intensity image, no ink to separate";
      return result;
    }

    BinaryImage ink = tracer.run("invert", [&] { return invert(binary); });
    if (cfg.morphology) {
      ink = tracer.run("bridge", [&] { return bridge(ink); });
      ink = tracer.run("remove", [&] { return remove_interior(ink); });
      ink = tracer.run("skeletonize", [&] { return skeletonize(ink); });
    }

    std::optional<BinaryImage> edges;
    if (cfg.edge != EdgeChoice::None) edges = tracer.run("edges", [&] { return run_edges(ink, cfg); });

    const BinaryImage& source = cfg.crop_stage == CropStage::PostEdges ? *edges : ink;
    result.roi = tracer.run("crop", [&] { return auto_crop(source); });
  } catch (const NoForegroundError& e) {
    trace.status = PipelineStatus::BlankInput;
    trace.message = e.what();
  } catch (const Error& e) {
    trace.status = PipelineStatus::Error;
    trace.message = e.what();
  }
  return result;
}

}  // namespace sigroi
