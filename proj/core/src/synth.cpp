#include "sigroi/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sigroi {
namespace {

// std distributions are implementation-defined; these mappings keep the
// generator bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

struct Point {
  double x;
  double y;
};

constexpr int kPaperLevel = 250;
constexpr int kPaperNoise = 5;
constexpr int kMaxInk = 60;
// Room for the pen radius (at most 2 px) plus a pixel of slack.
constexpr double kInset = 3.0;

void stamp(RgbImage& img, Point center, double radius, const std::array<std::uint8_t, 3>& ink) {
  const int r0 = static_cast<int>(std::floor(center.y - radius));
  const int r1 = static_cast<int>(std::ceil(center.y + radius));
  const int c0 = static_cast<int>(std::floor(center.x - radius));
  const int c1 = static_cast<int>(std::ceil(center.x + radius));
  for (int r = std::max(r0, 0); r <= std::min(r1, img.height() - 1); ++r) {
    for (int c = std::max(c0, 0); c <= std::min(c1, img.width() - 1); ++c) {
      const double dx = c - center.x;
      const double dy = r - center.y;
      if (dx * dx + dy * dy > radius * radius) continue;
      for (int k = 0; k < 3; ++k) img.at(r, c, k) = ink[static_cast<std::size_t>(k)];
    }
  }
}

Point bezier(Point a, Point ctrl, Point b, double t) {
  const double u = 1.0 - t;
  return {u * u * a.x + 2 * u * t * ctrl.x + t * t * b.x, u * u * a.y + 2 * u * t * ctrl.y + t * t * b.y};
}

}  // namespace

BoundingBox ink_region(int width, int height) noexcept {
  const int col0 = width / 4;
  const int row0 = height / 4;
  return {row0, col0, row0 + std::max(height / 2, 1) - 1, col0 + std::max(width / 2, 1) - 1};
}

RgbImage generate_signature(std::uint64_t seed, int width, int height) {
  Rng rng(seed);
  RgbImage img(width, height);
  for (auto& v : img.pixels()) {
    v = static_cast<std::uint8_t>(kPaperLevel + rng.uniform_int(-kPaperNoise, kPaperNoise));
  }

  const std::array<std::uint8_t, 3> ink{static_cast<std::uint8_t>(rng.uniform_int(0, kMaxInk)),
                                        static_cast<std::uint8_t>(rng.uniform_int(0, kMaxInk)),
                                        static_cast<std::uint8_t>(rng.uniform_int(0, kMaxInk))};
  const double radius = rng.uniform_int(2, 4) / 2.0;

  const BoundingBox region = ink_region(width, height);
  const double x0 = region.min_col + kInset;
  const double x1 = region.max_col - kInset;
  const double y0 = region.min_row + kInset;
  const double y1 = region.max_row - kInset;
  auto random_point = [&] { return Point{rng.uniform(x0, x1), rng.uniform(y0, y1)}; };

  const int strokes = rng.uniform_int(2, 5);
  for (int s = 0; s < strokes; ++s) {
    Point start = random_point();
    const int segments = rng.uniform_int(2, 4);
    for (int g = 0; g < segments; ++g) {
      const Point ctrl = random_point();
      const Point end = random_point();
      const double reach = std::hypot(ctrl.x - start.x, ctrl.y - start.y) + std::hypot(end.x - ctrl.x, end.y - ctrl.y);
      const int steps = static_cast<int>(std::ceil(reach * 2.0)) + 1;
      for (int i = 0; i <= steps; ++i) stamp(img, bezier(start, ctrl, end, static_cast<double>(i) / steps), radius, ink);
      start = end;
    }
  }
  return img;
}

}  // namespace sigroi
