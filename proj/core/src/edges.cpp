#include "sigroi/edges.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigroi/errors.hpp"
#include "sigroi/threshold.hpp"

namespace sigroi {
namespace {

struct Kernel3 {
  std::array<std::array<double, 3>, 3> x;
};

constexpr Kernel3 kSobel{{{{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}}}};
constexpr Kernel3 kPrewitt{{{{-1, 0, 1}, {-1, 0, 1}, {-1, 0, 1}}}};

class ClampedView {
 public:
  ClampedView(std::span<const double> px, int width, int height) : px_(px), width_(width), height_(height) {}

  double operator()(int r, int c) const {
    r = std::clamp(r, 0, height_ - 1);
    c = std::clamp(c, 0, width_ - 1);
    return px_[static_cast<std::size_t>(r) * width_ + c];
  }

 private:
  std::span<const double> px_;
  int width_;
  int height_;
};

void finish_magnitude(GradientField& g) {
  g.magnitude.resize(g.gx.size());
  for (std::size_t i = 0; i < g.gx.size(); ++i) g.magnitude[i] = std::hypot(g.gx[i], g.gy[i]);
}

std::vector<double> as_real(const GrayImage& img) {
  return std::vector<double>(img.pixels().begin(), img.pixels().end());
}

}  // namespace

std::string_view to_string(GradientOperator op) noexcept {
  switch (op) {
    case GradientOperator::Sobel:
      return "sobel";
    case GradientOperator::Prewitt:
      return "prewitt";
    case GradientOperator::Roberts:
      return "roberts";
  }
  return "unknown";
}

double GradientField::max_magnitude() const noexcept {
  return magnitude.empty() ? 0.0 : *std::max_element(magnitude.begin(), magnitude.end());
}

GradientField gradient(std::span<const double> pixels, int width, int height, GradientOperator op) {
  const int min_size = op == GradientOperator::Roberts ? 2 : 3;
  if (width < min_size || height < min_size) {
    throw DimensionError(std::string(to_string(op)) + " needs an image of at least " + std::to_string(min_size) +
                         "x" + std::to_string(min_size));
  }
  if (pixels.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionError("gradient input size does not match its dimensions");
  }

  GradientField g{width, height, {}, {}, {}};
  const std::size_t n = pixels.size();
  g.gx.assign(n, 0.0);
  g.gy.assign(n, 0.0);
  const ClampedView px(pixels, width, height);

  if (op == GradientOperator::Roberts) {
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const std::size_t i = static_cast<std::size_t>(r) * width + c;
        g.gx[i] = px(r, c) - px(r + 1, c + 1);
        g.gy[i] = px(r, c + 1) - px(r + 1, c);
      }
    }
  } else {
    const Kernel3& k = op == GradientOperator::Sobel ? kSobel : kPrewitt;
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        double sx = 0.0;
        double sy = 0.0;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const double v = px(r + i - 1, c + j - 1);
            sx += k.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v;
            sy += k.x[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * v;
          }
        }
        const std::size_t idx = static_cast<std::size_t>(r) * width + c;
        g.gx[idx] = sx;
        g.gy[idx] = sy;
      }
    }
  }
  finish_magnitude(g);
  return g;
}

GradientField gradient(const GrayImage& img, GradientOperator op) {
  const auto real = as_real(img);
  return gradient(real, img.width(), img.height(), op);
}

double magnitude_otsu_threshold(std::span<const double> magnitude) {
  double max = 0.0;
  for (double m : magnitude) max = std::max(max, m);
  if (max <= 0.0) return 0.0;
  Histogram256 h;
  for (double m : magnitude) ++h.counts[static_cast<std::size_t>(std::lround(255.0 * m / max))];
  return otsu_threshold(h).normalized * max;
}

BinaryImage threshold_edges(const GradientField& g, double t) {
  std::vector<std::uint8_t> bits(g.magnitude.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = g.magnitude[i] > t ? 1 : 0;
  return BinaryImage(g.width, g.height, Convention::InkIsOne, std::move(bits));
}

BinaryImage detect_edges(const GrayImage& img, GradientOperator op) {
  const GradientField g = gradient(img, op);
  return threshold_edges(g, magnitude_otsu_threshold(g.magnitude));
}

void CannyParams::validate() const {
  if (!(gaussian_sigma > 0.0)) throw ParameterError("canny sigma must be positive");
  if (low.has_value() != high.has_value()) throw ParameterError("canny low and high must be set together");
  if (low && !(*low >= 0.0 && *low < *high)) throw ParameterError("canny thresholds need 0 <= low < high");
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("gaussian sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

std::vector<double> gaussian_blur(const GrayImage& img, double sigma) {
  const auto k = gaussian_kernel(sigma);
  const int radius = static_cast<int>(k.size() / 2);
  const int w = img.width();
  const int h = img.height();
  const auto src = as_real(img);

  std::vector<double> tmp(src.size());
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int cc = std::clamp(c + i, 0, w - 1);
        s += k[static_cast<std::size_t>(i + radius)] * src[static_cast<std::size_t>(r) * w + cc];
      }
      tmp[static_cast<std::size_t>(r) * w + c] = s;
    }
  }
  std::vector<double> out(src.size());
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int rr = std::clamp(r + i, 0, h - 1);
        s += k[static_cast<std::size_t>(i + radius)] * tmp[static_cast<std::size_t>(rr) * w + c];
      }
      out[static_cast<std::size_t>(r) * w + c] = s;
    }
  }
  return out;
}

int direction_bin(double gx, double gy) noexcept {
  double a = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
  if (a < 0.0) a += 180.0;
  if (a >= 180.0) a -= 180.0;
  if (a <= 22.5) return 0;
  if (a <= 67.5) return 1;
  if (a <= 112.5) return 2;
  if (a <= 157.5) return 3;
  return 0;
}

CannyStages canny_stages(const GrayImage& img, const CannyParams& p) {
  p.validate();
  const int w = img.width();
  const int h = img.height();
  auto smoothed = gaussian_blur(img, p.gaussian_sigma);
  GradientField field = gradient(smoothed, w, h, GradientOperator::Sobel);

  // Offsets (drow, dcol) along the gradient for bins 0, 45, 90, 135 degrees;
  // gx grows with the column and gy with the row.
  static constexpr std::array<std::array<int, 2>, 4> kStep{{{0, 1}, {1, 1}, {1, 0}, {1, -1}}};
  auto mag_at = [&](int r, int c) {
    if (r < 0 || c < 0 || r >= h || c >= w) return 0.0;
    return field.magnitude[static_cast<std::size_t>(r) * w + c];
  };

  std::vector<double> suppressed(field.magnitude.size(), 0.0);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * w + c;
      const double m = field.magnitude[i];
      if (m <= 0.0) continue;
      const auto [dr, dc] = kStep[static_cast<std::size_t>(direction_bin(field.gx[i], field.gy[i]))];
      // Strict on one side, inclusive on the other: a two-pixel plateau keeps one pixel.
      if (m > mag_at(r - dr, c - dc) && m >= mag_at(r + dr, c + dc)) suppressed[i] = m;
    }
  }

  double low = 0.0;
  double high = 0.0;
  if (p.low) {
    low = *p.low;
    high = *p.high;
  } else {
    high = magnitude_otsu_threshold(field.magnitude);
    low = 0.4 * high;
  }

  BinaryImage strong(w, h, Convention::InkIsOne);
  BinaryImage weak(w, h, Convention::InkIsOne);
  for (std::size_t i = 0; i < suppressed.size(); ++i) {
    const double m = suppressed[i];
    if (m > high) {
      strong.bits()[i] = 1;
    } else if (m > low) {
      weak.bits()[i] = 1;
    }
  }

  BinaryImage edges = strong;
  std::vector<std::pair<int, int>> stack;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (strong.at(r, c)) stack.emplace_back(r, c);
    }
  }
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        const int rr = r + dr;
        const int cc = c + dc;
        if (rr < 0 || cc < 0 || rr >= h || cc >= w) continue;
        if (weak.at(rr, cc) && !edges.at(rr, cc)) {
          edges.at(rr, cc) = 1;
          stack.emplace_back(rr, cc);
        }
      }
    }
  }

  return CannyStages{w,    h,    std::move(smoothed), std::move(field), std::move(suppressed),
                     low,  high, std::move(strong),   std::move(weak),  std::move(edges)};
}

BinaryImage canny(const GrayImage& img, const CannyParams& p) { return std::move(canny_stages(img, p).edges); }

}  // namespace sigroi
