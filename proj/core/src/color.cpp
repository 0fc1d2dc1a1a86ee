#include "sigroi/color.hpp"

#include <vector>

namespace sigroi {

GrayImage rgb_to_gray(const RgbImage& img) {
  const auto src = img.pixels();
  std::vector<std::uint8_t> px(img.pixel_count());
  for (std::size_t i = 0; i < px.size(); ++i) {
    const double y = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
    px[i] = to_intensity(y);
  }
  return GrayImage(img.width(), img.height(), std::move(px));
}

}  // namespace sigroi
