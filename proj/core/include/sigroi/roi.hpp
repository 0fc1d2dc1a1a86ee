#pragma once

#include "sigroi/image.hpp"

namespace sigroi {

/// Inclusive pixel extent. Stores both corners; width/height derive the extent.
struct BoundingBox {
  int min_row = 0;
  int min_col = 0;
  int max_row = 0;
  int max_col = 0;

  int height() const noexcept { return max_row - min_row + 1; }
  int width() const noexcept { return max_col - min_col + 1; }
  bool fits(int image_width, int image_height) const noexcept;

  bool operator==(const BoundingBox&) const = default;
};

/// Tight box around every 1 bit. Requires ink=1; throws NoForegroundError
/// when the image has no 1 bit.
BoundingBox foreground_bbox(const BinaryImage& img);

/// Copies the box out of the image. Throws BoundsError if the box does not fit.
BinaryImage crop(const BinaryImage& img, const BoundingBox& box);
GrayImage crop(const GrayImage& img, const BoundingBox& box);
RgbImage crop(const RgbImage& img, const BoundingBox& box);

/// crop(img, foreground_bbox(img)).
BinaryImage auto_crop(const BinaryImage& img);

}  // namespace sigroi
