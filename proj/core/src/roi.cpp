#include "sigroi/roi.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

void check_fits(const BoundingBox& box, int width, int height) {
  if (!box.fits(width, height)) {
    throw BoundsError("crop box rows " + std::to_string(box.min_row) + ".." + std::to_string(box.max_row) +
                      ", cols " + std::to_string(box.min_col) + ".." + std::to_string(box.max_col) +
                      " does not fit a " + std::to_string(width) + "x" + std::to_string(height) + " image");
  }
}

template <typename T>
std::vector<T> copy_rows(std::span<const T> src, int src_width, const BoundingBox& box, int channels) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(box.width()) * box.height() * channels);
  for (int r = box.min_row; r <= box.max_row; ++r) {
    const auto first = src.begin() + (static_cast<std::ptrdiff_t>(r) * src_width + box.min_col) * channels;
    out.insert(out.end(), first, first + static_cast<std::ptrdiff_t>(box.width()) * channels);
  }
  return out;
}

}  // namespace

bool BoundingBox::fits(int image_width, int image_height) const noexcept {
  return 0 <= min_row && min_row <= max_row && max_row < image_height && 0 <= min_col && min_col <= max_col &&
         max_col < image_width;
}

BoundingBox foreground_bbox(const BinaryImage& img) {
  require_ink_is_one(img, "foreground_bbox");
  BoundingBox box{img.height(), img.width(), -1, -1};
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!img.at(r, c)) continue;
      box.min_row = std::min(box.min_row, r);
      box.max_row = std::max(box.max_row, r);
      box.min_col = std::min(box.min_col, c);
      box.max_col = std::max(box.max_col, c);
    }
  }
  if (box.max_row < 0) throw NoForegroundError();
  return box;
}

BinaryImage crop(const BinaryImage& img, const BoundingBox& box) {
  check_fits(box, img.width(), img.height());
  return BinaryImage(box.width(), box.height(), img.convention(), copy_rows(img.bits(), img.width(), box, 1));
}

GrayImage crop(const GrayImage& img, const BoundingBox& box) {
  check_fits(box, img.width(), img.height());
  return GrayImage(box.width(), box.height(), copy_rows(img.pixels(), img.width(), box, 1));
}

RgbImage crop(const RgbImage& img, const BoundingBox& box) {
  check_fits(box, img.width(), img.height());
  return RgbImage(box.width(), box.height(), copy_rows(img.pixels(), img.width(), box, 3));
}

BinaryImage auto_crop(const BinaryImage& img) { return crop(img, foreground_bbox(img)); }

}  // namespace sigroi
