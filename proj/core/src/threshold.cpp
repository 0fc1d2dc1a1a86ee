#include "sigroi/threshold.hpp"

#include <numeric>
#include <vector>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// Between-class variance up to the constant factor 1/N^2, held as the exact
// fraction num / den = D^2 / (n0 n1) with D = s0 N - S n0.
struct Objective {
  u128 num = 0;
  std::uint64_t den = 1;
};

// Compare by integer quotient, then by remainder cross-multiplication; both
// remainders are below their 2^54 denominators so the products fit.
int compare(const Objective& a, const Objective& b) {
  const u128 qa = a.num / a.den;
  const u128 qb = b.num / b.den;
  if (qa != qb) return qa < qb ? -1 : 1;
  const u128 lhs = (a.num % a.den) * b.den;
  const u128 rhs = (b.num % b.den) * a.den;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -1 : 1;
}

constexpr std::uint64_t kMaxSamples = std::uint64_t{1} << 28;

}  // namespace

std::uint64_t Histogram256::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

int Histogram256::occupied_bins() const noexcept {
  int n = 0;
  for (auto c : counts) n += c != 0;
  return n;
}

ThresholdResult ThresholdResult::from_level(int level, bool degenerate) {
  if (level < 0 || level > 255) throw ParameterError("threshold level must be in [0, 255]");
  return {level, static_cast<double>(level) / 255.0, degenerate};
}

Histogram256 histogram(const GrayImage& img) {
  Histogram256 h;
  for (auto v : img.pixels()) ++h.counts[v];
  return h;
}

ThresholdResult otsu_threshold(const Histogram256& h) {
  const std::uint64_t n = h.total();
  if (n == 0) throw EmptyInputError("otsu threshold of an empty histogram");
  if (n >= kMaxSamples) throw ParameterError("histogram exceeds 2^28 samples");

  if (h.occupied_bins() == 1) {
    for (int v = 0; v < 256; ++v) {
      if (h.counts[static_cast<std::size_t>(v)] != 0) return ThresholdResult::from_level(v, true);
    }
  }

  std::uint64_t sum = 0;
  for (int v = 0; v < 256; ++v) sum += static_cast<std::uint64_t>(v) * h.counts[static_cast<std::size_t>(v)];

  Objective best;
  std::vector<int> argmax;
  std::uint64_t n0 = 0;
  std::uint64_t s0 = 0;
  for (int t = 0; t < 255; ++t) {
    n0 += h.counts[static_cast<std::size_t>(t)];
    s0 += static_cast<std::uint64_t>(t) * h.counts[static_cast<std::size_t>(t)];
    const std::uint64_t n1 = n - n0;
    Objective obj;
    if (n0 != 0 && n1 != 0) {
      const i128 d = static_cast<i128>(s0) * n - static_cast<i128>(sum) * n0;
      const u128 mag = static_cast<u128>(d < 0 ? -d : d);
      obj = {mag * mag, n0 * n1};
    }
    const int cmp = compare(obj, best);
    if (cmp > 0 || argmax.empty()) {
      best = obj;
      argmax.assign(1, t);
    } else if (cmp == 0) {
      argmax.push_back(t);
    }
  }

  const long long total = std::accumulate(argmax.begin(), argmax.end(), 0LL);
  const long long count = static_cast<long long>(argmax.size());
  return ThresholdResult::from_level(static_cast<int>((2 * total + count) / (2 * count)));
}

BinaryImage binarize(const GrayImage& img, const ThresholdResult& t) {
  std::vector<std::uint8_t> bits(img.pixel_count());
  const auto px = img.pixels();
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = px[i] > t.level ? 1 : 0;
  return BinaryImage(img.width(), img.height(), Convention::BackgroundIsOne, std::move(bits));
}

}  // namespace sigroi
