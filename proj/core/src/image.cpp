#include "sigroi/image.hpp"

#include <algorithm>
#include <string>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw DimensionError("image dimensions must be at least 1x1, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
}

void check_size(std::size_t actual, std::size_t expected) {
  if (actual != expected) {
    throw DimensionError("pixel buffer holds " + std::to_string(actual) + " values, expected " +
                         std::to_string(expected));
  }
}

}  // namespace

RgbImage::RgbImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(pixel_count() * 3, fill);
}

RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  check_size(pixels_.size(), pixel_count() * 3);
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  check_size(pixels_.size(), static_cast<std::size_t>(width) * height);
}

BinaryImage::BinaryImage(int width, int height, Convention convention, std::uint8_t fill)
    : width_(width), height_(height), convention_(convention) {
  check_dims(width, height);
  if (fill > 1) throw ParameterError("binary fill value must be 0 or 1");
  bits_.assign(static_cast<std::size_t>(width) * height, fill);
}

BinaryImage::BinaryImage(int width, int height, Convention convention, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), convention_(convention), bits_(std::move(bits)) {
  check_dims(width, height);
  check_size(bits_.size(), static_cast<std::size_t>(width) * height);
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw ParameterError("binary image values must be 0 or 1");
  }
}

std::size_t BinaryImage::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string_view to_string(Convention c) noexcept {
  return c == Convention::InkIsOne ? "ink=1" : "background=1";
}

BinaryImage invert(const BinaryImage& img) {
  std::vector<std::uint8_t> bits(img.bits().begin(), img.bits().end());
  for (auto& b : bits) b ^= 1U;
  const auto flipped =
      img.convention() == Convention::InkIsOne ? Convention::BackgroundIsOne : Convention::InkIsOne;
  return BinaryImage(img.width(), img.height(), flipped, std::move(bits));
}

void require_ink_is_one(const BinaryImage& img, std::string_view op) {
  if (img.convention() != Convention::InkIsOne) {
    throw ConventionError(std::string(op) + " requires an ink=1 image, got " +
                          std::string(to_string(img.convention())));
  }
}

GrayImage to_gray(const BinaryImage& img) {
  const BinaryImage& ink = img.convention() == Convention::InkIsOne ? img : invert(img);
  std::vector<std::uint8_t> px(ink.pixel_count());
  std::transform(ink.bits().begin(), ink.bits().end(), px.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(b ? 255 : 0); });
  return GrayImage(img.width(), img.height(), std::move(px));
}

RgbImage to_rgb(const GrayImage& img) {
  std::vector<std::uint8_t> px(img.pixel_count() * 3);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    px[3 * i] = px[3 * i + 1] = px[3 * i + 2] = img.pixels()[i];
  }
  return RgbImage(img.width(), img.height(), std::move(px));
}

RgbImage to_rgb(const BinaryImage& img) {
  const bool ink_is_one = img.convention() == Convention::InkIsOne;
  std::vector<std::uint8_t> px(img.pixel_count() * 3);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const bool ink = (img.bits()[i] == 1) == ink_is_one;
    px[3 * i] = px[3 * i + 1] = px[3 * i + 2] = ink ? 0 : 255;
  }
  return RgbImage(img.width(), img.height(), std::move(px));
}

GrayImage channel(const RgbImage& img, int index) {
  if (index < 0 || index > 2) throw ParameterError("channel index must be 0, 1 or 2");
  std::vector<std::uint8_t> px(img.pixel_count());
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = img.pixels()[3 * i + index];
  return GrayImage(img.width(), img.height(), std::move(px));
}

}  // namespace sigroi
