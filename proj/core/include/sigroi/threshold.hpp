#pragma once

#include <array>
#include <cstdint>

#include "sigroi/image.hpp"

namespace sigroi {

/// Pixel counts per 8-bit intensity level.
struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const noexcept;
  /// Number of levels with a nonzero count.
  int occupied_bins() const noexcept;
};

struct ThresholdResult {
  int level = 0;            ///< in [0, 255]
  double normalized = 0.0;  ///< level / 255
  bool degenerate = false;  ///< histogram had a single occupied bin

  static ThresholdResult from_level(int level, bool degenerate = false);
};

Histogram256 histogram(const GrayImage& img);

/// Otsu's global threshold.
///
/// Class 0 holds levels <= t, class 1 levels > t. Returns the t in [0, 254]
/// maximizing the between-class variance w0 w1 (mu0 - mu1)^2, which is the
/// same t that minimizes the weighted within-class variance. The objective is
/// compared exactly in integer arithmetic; when several levels tie, the
/// rounded mean of all of them is returned. A histogram with one occupied bin
/// returns that bin with `degenerate` set.
///
/// Throws EmptyInputError if every count is zero, and ParameterError if the
/// total exceeds 2^28 samples (the exact-arithmetic range).
ThresholdResult otsu_threshold(const Histogram256& h);

/// Pixels strictly above t.level become 1, all others 0. The result uses the
/// background=1 convention: white paper maps to 1.
BinaryImage binarize(const GrayImage& img, const ThresholdResult& t);

}  // namespace sigroi
