#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sigroi/image.hpp"

namespace sigroi {

/// Projections of an image over a set of angles.
///
/// values is row-major with one row per offset bin and one column per angle.
/// Offsets are integer bins measured from the image center pixel
/// (width / 2, height / 2).
struct Sinogram {
  std::vector<double> angles;  ///< degrees in [0, 180)
  std::vector<int> offsets;    ///< ascending, symmetric around 0
  std::vector<double> values;

  std::size_t bins() const noexcept { return offsets.size(); }
  double at(std::size_t bin, std::size_t angle) const { return values[bin * angles.size() + angle]; }
  double column_sum(std::size_t angle) const;
  std::vector<double> column(std::size_t angle) const;
};

/// 0, 1, ..., 179.
std::vector<double> default_angles();

/// Number of offset bins for a width x height image; at least the diagonal.
std::size_t radon_bin_count(int width, int height);

/// Pixel-driven forward projection.
///
/// A pixel at (row, col) sits at x = col - width/2, y = height/2 - row and
/// projects to p = x cos(theta) + y sin(theta). Its value is split between
/// the two nearest bins by linear interpolation, so every column sums to the
/// image mass. At 0 degrees the projection is the vector of column sums.
///
/// Throws ParameterError for an empty angle list or an angle outside [0, 180).
Sinogram radon_transform(const GrayImage& img, std::span<const double> angles);

/// Same code path as the gray transform with bits read as 0.0 / 1.0.
Sinogram radon_transform(const BinaryImage& img, std::span<const double> angles);

/// Bit-packed path: rows packed into 64-bit words, only set bits are visited.
/// Agrees with the float path up to rounding.
Sinogram radon_transform_packed(const BinaryImage& img, std::span<const double> angles);

/// One transform per channel (R, G, B).
std::array<Sinogram, 3> radon_rgb(const RgbImage& img, std::span<const double> angles);

// Timing harness.

struct TimingStats {
  std::size_t repeats = 0;
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
};

inline constexpr std::size_t kWarmupRuns = 2;
inline constexpr std::size_t kDefaultRepeats = 11;

/// Runs `fn` kWarmupRuns times untimed, then `repeats` times timed on the
/// calling thread. Throws ParameterError if repeats is 0.
TimingStats measure(std::size_t repeats, const std::function<void()>& fn);

TimingStats summarize(std::vector<double> samples_ms);

TimingStats time_radon(const RgbImage& img, std::span<const double> angles, std::size_t repeats);
TimingStats time_radon(const GrayImage& img, std::span<const double> angles, std::size_t repeats);

enum class BinaryRadonPath { Float, Packed };
TimingStats time_radon(const BinaryImage& img, std::span<const double> angles, std::size_t repeats,
                       BinaryRadonPath path = BinaryRadonPath::Packed);

/// One line of the benchmark report.
struct BenchmarkRow {
  std::string kind;
  std::size_t pixels = 0;
  TimingStats stats;
};

/// Comma-separated report: '#' methodology header, a column header line
/// "kind,pixels,repeats,median_ms,min_ms", then one line per row.
void write_benchmark_report(std::ostream& out, std::span<const BenchmarkRow> rows, std::size_t angle_count);

}  // namespace sigroi
