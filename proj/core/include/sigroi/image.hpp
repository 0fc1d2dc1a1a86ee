#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace sigroi {

// All rasters are row-major with (row, col) addressing and row 0 at the top.

/// Converts a real intensity to [0, 255], rounding half away from zero.
inline std::uint8_t to_intensity(double v) {
  if (!(v > 0.0)) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

/// 8-bit-per-channel color raster (interleaved R, G, B).
class RgbImage {
 public:
  RgbImage(int width, int height, std::uint8_t fill = 0);
  RgbImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return static_cast<std::size_t>(width_) * height_; }

  std::uint8_t at(int row, int col, int channel) const {
    return pixels_[(static_cast<std::size_t>(row) * width_ + col) * 3 + channel];
  }
  std::uint8_t& at(int row, int col, int channel) {
    return pixels_[(static_cast<std::size_t>(row) * width_ + col) * 3 + channel];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool operator==(const RgbImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// 8-bit intensity raster.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }

  std::uint8_t at(int row, int col) const { return pixels_[static_cast<std::size_t>(row) * width_ + col]; }
  std::uint8_t& at(int row, int col) { return pixels_[static_cast<std::size_t>(row) * width_ + col]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Which pixel value marks the signature.
enum class Convention : std::uint8_t {
  InkIsOne,         ///< 1 = ink (foreground), 0 = paper
  BackgroundIsOne,  ///< 1 = paper, as produced by thresholding white paper
};

std::string_view to_string(Convention c) noexcept;

/// Bitmask raster tagged with its foreground convention. One byte per bit.
class BinaryImage {
 public:
  BinaryImage(int width, int height, Convention convention, std::uint8_t fill = 0);
  BinaryImage(int width, int height, Convention convention, std::vector<std::uint8_t> bits);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return bits_.size(); }
  Convention convention() const noexcept { return convention_; }

  std::uint8_t at(int row, int col) const { return bits_[static_cast<std::size_t>(row) * width_ + col]; }
  std::uint8_t& at(int row, int col) { return bits_[static_cast<std::size_t>(row) * width_ + col]; }

  /// Out-of-bounds reads return 0.
  std::uint8_t get_or_zero(int row, int col) const noexcept {
    if (row < 0 || col < 0 || row >= height_ || col >= width_) return 0;
    return bits_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::span<std::uint8_t> bits() noexcept { return bits_; }

  std::size_t count_ones() const noexcept;

  bool operator==(const BinaryImage&) const = default;

 private:
  int width_;
  int height_;
  Convention convention_;
  std::vector<std::uint8_t> bits_;
};

using AnyImage = std::variant<RgbImage, GrayImage, BinaryImage>;

/// Flips every bit and the convention tag.
BinaryImage invert(const BinaryImage& img);

/// Throws ConventionError unless img is ink=1. `op` names the caller in the message.
void require_ink_is_one(const BinaryImage& img, std::string_view op);

/// Ink=1 bits to a 0/255 intensity image (ink = 255).
GrayImage to_gray(const BinaryImage& img);

/// Replicates the gray channel into R, G and B.
RgbImage to_rgb(const GrayImage& img);
/// Ink=1 pixels become black on white; background=1 is inverted first.
RgbImage to_rgb(const BinaryImage& img);

/// Extracts one channel (0 = R, 1 = G, 2 = B) as an intensity image.
GrayImage channel(const RgbImage& img, int index);

}  // namespace sigroi
