#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sigroi/image.hpp"

namespace sigroi {

enum class GradientOperator { Sobel, Prewitt, Roberts };

std::string_view to_string(GradientOperator op) noexcept;

/// Per-pixel derivative estimates, row-major, same size as the source.
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<double> gx;
  std::vector<double> gy;
  std::vector<double> magnitude;

  double max_magnitude() const noexcept;
};

/// Kernel pair correlation with edge-clamped borders.
///
///   sobel   gx = [-1 0 1; -2 0 2; -1 0 1], gy = gx transposed
///   prewitt gx = [-1 0 1; -1 0 1; -1 0 1], gy = gx transposed
///   roberts gx = [1 0; 0 -1], gy = [0 1; -1 0] anchored at the top-left tap
///
/// gx grows left to right, gy top to bottom. Throws DimensionError when the
/// image is smaller than the kernel.
GradientField gradient(const GrayImage& img, GradientOperator op);

/// Same as above on a real-valued raster (used after gaussian smoothing).
GradientField gradient(std::span<const double> pixels, int width, int height, GradientOperator op);

/// Otsu level of the magnitude histogram, mapped back to magnitude units.
/// Magnitudes are quantized to 256 bins over [0, max]. Returns 0 for an
/// all-zero field.
double magnitude_otsu_threshold(std::span<const double> magnitude);

/// Bit = 1 iff magnitude > t. Output is ink=1.
BinaryImage threshold_edges(const GradientField& g, double t);

/// Gradient plus the default Otsu magnitude threshold.
BinaryImage detect_edges(const GrayImage& img, GradientOperator op);

struct CannyParams {
  double gaussian_sigma = 1.4;
  /// When unset, low = 0.4 T and high = T with T the magnitude Otsu threshold.
  std::optional<double> low;
  std::optional<double> high;

  /// Throws ParameterError unless sigma > 0, both or neither threshold is
  /// set, and 0 <= low < high.
  void validate() const;
};

/// Canny intermediates, kept for inspection and testing.
struct CannyStages {
  int width = 0;
  int height = 0;
  std::vector<double> smoothed;
  GradientField field;
  std::vector<double> suppressed;  ///< magnitude after non-maximum suppression
  double low = 0.0;
  double high = 0.0;
  BinaryImage strong;  ///< suppressed > high
  BinaryImage weak;    ///< low < suppressed <= high
  BinaryImage edges;   ///< strong plus weak pixels 8-connected to strong
};

/// Normalized, truncated gaussian kernel of radius ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);

/// Separable gaussian blur with edge clamping.
std::vector<double> gaussian_blur(const GrayImage& img, double sigma);

/// Quantized gradient direction in {0, 1, 2, 3} for 0, 45, 90 and 135 degrees.
/// Sectors are 45 degrees wide; an angle exactly on a sector boundary goes to
/// the lower bin.
int direction_bin(double gx, double gy) noexcept;

CannyStages canny_stages(const GrayImage& img, const CannyParams& p = {});

/// Gaussian blur, sobel gradient, non-maximum suppression along the quantized
/// direction, double threshold and 8-connected hysteresis. Output is ink=1.
BinaryImage canny(const GrayImage& img, const CannyParams& p = {});

}  // namespace sigroi
