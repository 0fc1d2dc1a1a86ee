#include "sigroi/radon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

void check_angles(std::span<const double> angles) {
  if (angles.empty()) throw ParameterError("radon transform needs at least one angle");
  for (double a : angles) {
    if (!(a >= 0.0 && a < 180.0)) throw ParameterError("radon angles must lie in [0, 180)");
  }
}

int half_span(int width, int height) {
  const double diagonal = std::sqrt(static_cast<double>(width) * width + static_cast<double>(height) * height);
  return static_cast<int>(std::ceil(diagonal / 2.0)) + 1;
}

Sinogram empty_sinogram(int width, int height, std::span<const double> angles) {
  Sinogram s;
  s.angles.assign(angles.begin(), angles.end());
  const int half = half_span(width, height);
  s.offsets.resize(static_cast<std::size_t>(2 * half + 1));
  for (int i = 0; i < static_cast<int>(s.offsets.size()); ++i) s.offsets[static_cast<std::size_t>(i)] = i - half;
  s.values.assign(s.offsets.size() * s.angles.size(), 0.0);
  return s;
}

struct Projection {
  double cos;
  double sin;
};

Projection projection(double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {std::cos(t), std::sin(t)};
}

// Linear split of `value` at fractional bin position p (already shifted so
// the center pixel lands on bin `half`).
inline void deposit(std::vector<double>& acc, double p, double value) {
  const double lo = std::floor(p);
  const double frac = p - lo;
  const auto i = static_cast<std::size_t>(lo);
  acc[i] += value * (1.0 - frac);
  acc[i + 1] += value * frac;
}

void store_column(Sinogram& s, std::size_t angle, const std::vector<double>& acc) {
  const std::size_t n = s.angles.size();
  for (std::size_t b = 0; b < s.offsets.size(); ++b) s.values[b * n + angle] = acc[b];
}

Sinogram dense_transform(std::span<const double> px, int width, int height, std::span<const double> angles) {
  check_angles(angles);
  Sinogram s = empty_sinogram(width, height, angles);
  const double half = static_cast<double>(s.offsets.size() / 2);
  const int cx = width / 2;
  const int cy = height / 2;
  std::vector<double> acc(s.offsets.size() + 1);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const auto [cs, sn] = projection(angles[a]);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int r = 0; r < height; ++r) {
      const double row_base = static_cast<double>(cy - r) * sn + half;
      const double* line = px.data() + static_cast<std::size_t>(r) * width;
      for (int c = 0; c < width; ++c) deposit(acc, row_base + static_cast<double>(c - cx) * cs, line[c]);
    }
    store_column(s, a, acc);
  }
  return s;
}

template <typename Range>
std::vector<double> to_real(const Range& values) {
  return std::vector<double>(values.begin(), values.end());
}

}  // namespace

double Sinogram::column_sum(std::size_t angle) const {
  double sum = 0.0;
  for (std::size_t b = 0; b < bins(); ++b) sum += at(b, angle);
  return sum;
}

std::vector<double> Sinogram::column(std::size_t angle) const {
  std::vector<double> col(bins());
  for (std::size_t b = 0; b < bins(); ++b) col[b] = at(b, angle);
  return col;
}

std::vector<double> default_angles() {
  std::vector<double> a(180);
  for (int i = 0; i < 180; ++i) a[static_cast<std::size_t>(i)] = i;
  return a;
}

std::size_t radon_bin_count(int width, int height) {
  return static_cast<std::size_t>(2 * half_span(width, height) + 1);
}

Sinogram radon_transform(const GrayImage& img, std::span<const double> angles) {
  return dense_transform(to_real(img.pixels()), img.width(), img.height(), angles);
}

Sinogram radon_transform(const BinaryImage& img, std::span<const double> angles) {
  return dense_transform(to_real(img.bits()), img.width(), img.height(), angles);
}

Sinogram radon_transform_packed(const BinaryImage& img, std::span<const double> angles) {
  check_angles(angles);
  const int width = img.width();
  const int height = img.height();
  const std::size_t words_per_row = (static_cast<std::size_t>(width) + 63) / 64;
  std::vector<std::uint64_t> packed(words_per_row * height, 0);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (img.at(r, c)) packed[r * words_per_row + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }

  Sinogram s = empty_sinogram(width, height, angles);
  const double half = static_cast<double>(s.offsets.size() / 2);
  const int cx = width / 2;
  const int cy = height / 2;
  std::vector<double> acc(s.offsets.size() + 1);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const auto [cs, sn] = projection(angles[a]);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int r = 0; r < height; ++r) {
      const double row_base = static_cast<double>(cy - r) * sn + half;
      for (std::size_t w = 0; w < words_per_row; ++w) {
        for (std::uint64_t word = packed[r * words_per_row + w]; word != 0; word &= word - 1) {
          const int c = static_cast<int>(w * 64) + std::countr_zero(word);
          deposit(acc, row_base + static_cast<double>(c - cx) * cs, 1.0);
        }
      }
    }
    store_column(s, a, acc);
  }
  return s;
}

std::array<Sinogram, 3> radon_rgb(const RgbImage& img, std::span<const double> angles) {
  return {radon_transform(channel(img, 0), angles), radon_transform(channel(img, 1), angles),
          radon_transform(channel(img, 2), angles)};
}

TimingStats summarize(std::vector<double> samples_ms) {
  if (samples_ms.empty()) throw ParameterError("no timing samples");
  std::sort(samples_ms.begin(), samples_ms.end());
  const std::size_t n = samples_ms.size();
  const double median = n % 2 ? samples_ms[n / 2] : 0.5 * (samples_ms[n / 2 - 1] + samples_ms[n / 2]);
  return {n, median, samples_ms.front(), samples_ms.back()};
}

TimingStats measure(std::size_t repeats, const std::function<void()>& fn) {
  if (repeats == 0) throw ParameterError("timing needs at least one repeat");
  for (std::size_t i = 0; i < kWarmupRuns; ++i) fn();
  std::vector<double> samples;
  samples.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return summarize(std::move(samples));
}

namespace {

// Keeps the optimizer from discarding an unused transform.
volatile double g_sink = 0.0;

void consume(const Sinogram& s) { g_sink = g_sink + s.values[s.values.size() / 2]; }

}  // namespace

TimingStats time_radon(const RgbImage& img, std::span<const double> angles, std::size_t repeats) {
  return measure(repeats, [&] {
    for (const auto& s : radon_rgb(img, angles)) consume(s);
  });
}

TimingStats time_radon(const GrayImage& img, std::span<const double> angles, std::size_t repeats) {
  return measure(repeats, [&] { consume(radon_transform(img, angles)); });
}

TimingStats time_radon(const BinaryImage& img, std::span<const double> angles, std::size_t repeats,
                       BinaryRadonPath path) {
  if (path == BinaryRadonPath::Packed) {
    return measure(repeats, [&] { consume(radon_transform_packed(img, angles)); });
  }
  return measure(repeats, [&] { consume(radon_transform(img, angles)); });
}

void write_benchmark_report(std::ostream& out, std::span<const BenchmarkRow> rows, std::size_t angle_count) {
  out << "# radon/edge timing report\n"
      << "# method: " << kWarmupRuns << " warmup runs, then median and min over timed runs, single thread\n"
      << "# angles: " << angle_count << "\n"
      << "# absolute times depend on the machine; compare rows only\n"
      << "kind,pixels,repeats,median_ms,min_ms\n";
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out.setf(std::ios::fixed);
  out.precision(4);
  for (const auto& row : rows) {
    out << row.kind << ',' << row.pixels << ',' << row.stats.repeats << ',' << row.stats.median_ms << ','
        << row.stats.min_ms << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace sigroi
