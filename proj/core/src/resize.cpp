#include "sigroi/resize.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

struct Tap {
  int lo;
  int hi;
  double frac;  // weight of hi
};

// Sampling taps along one axis, clamped to [0, in - 1].
std::vector<Tap> axis_taps(int in, int out) {
  std::vector<Tap> taps(static_cast<std::size_t>(out));
  const double scale = static_cast<double>(in) / out;
  for (int i = 0; i < out; ++i) {
    double s = (i + 0.5) * scale - 0.5;
    s = std::clamp(s, 0.0, static_cast<double>(in - 1));
    const int lo = static_cast<int>(std::floor(s));
    const int hi = std::min(lo + 1, in - 1);
    taps[static_cast<std::size_t>(i)] = {lo, hi, s - lo};
  }
  return taps;
}

}  // namespace

GrayImage resize_bilinear(const GrayImage& img, int out_h, int out_w) {
  if (out_h < 1 || out_w < 1) {
    throw DimensionError("resize target must be at least 1x1, got " + std::to_string(out_h) + "x" +
                         std::to_string(out_w));
  }
  if (out_h == img.height() && out_w == img.width()) return img;

  const auto rows = axis_taps(img.height(), out_h);
  const auto cols = axis_taps(img.width(), out_w);
  GrayImage out(out_w, out_h);
  for (int r = 0; r < out_h; ++r) {
    const Tap& ty = rows[static_cast<std::size_t>(r)];
    for (int c = 0; c < out_w; ++c) {
      const Tap& tx = cols[static_cast<std::size_t>(c)];
      const double top = img.at(ty.lo, tx.lo) * (1.0 - tx.frac) + img.at(ty.lo, tx.hi) * tx.frac;
      const double bottom = img.at(ty.hi, tx.lo) * (1.0 - tx.frac) + img.at(ty.hi, tx.hi) * tx.frac;
      out.at(r, c) = to_intensity(top * (1.0 - ty.frac) + bottom * ty.frac);
    }
  }
  return out;
}

}  // namespace sigroi
