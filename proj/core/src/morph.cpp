#include "sigroi/morph.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

namespace sigroi {
namespace {

using Nb = Neighborhood3x3;

std::array<std::uint8_t, 256> build_ring_component_table() {
  std::array<std::uint8_t, 256> table{};
  for (int mask = 0; mask < 256; ++mask) {
    std::array<int, 8> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int a = 0; a < 8; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < 8; ++b) {
        if (!(mask >> b & 1)) continue;
        const int dr = std::abs(Nb::kRowOffset[static_cast<std::size_t>(a)] - Nb::kRowOffset[static_cast<std::size_t>(b)]);
        const int dc = std::abs(Nb::kColOffset[static_cast<std::size_t>(a)] - Nb::kColOffset[static_cast<std::size_t>(b)]);
        if (dr <= 1 && dc <= 1) parent[static_cast<std::size_t>(find(a))] = find(b);
      }
    }
    int roots = 0;
    for (int a = 0; a < 8; ++a) roots += (mask >> a & 1) && find(a) == a;
    table[static_cast<std::size_t>(mask)] = static_cast<std::uint8_t>(roots);
  }
  return table;
}

std::uint8_t ring_mask(const BinaryImage& img, int r, int c) noexcept {
  std::uint8_t m = 0;
  for (int k = 0; k < 8; ++k) {
    m |= static_cast<std::uint8_t>(img.get_or_zero(r + Nb::kRowOffset[static_cast<std::size_t>(k)],
                                                    c + Nb::kColOffset[static_cast<std::size_t>(k)])
                                   << k);
  }
  return m;
}

bool bit(std::uint8_t mask, int k) noexcept { return (mask >> (k & 7)) & 1; }

// Zhang-Suen crossing number: 0 -> 1 transitions around the ring.
int transitions(std::uint8_t m) noexcept {
  int a = 0;
  for (int k = 0; k < 8; ++k) a += !bit(m, k) && bit(m, k + 1);
  return a;
}

// Yokoi 8-connectivity number; 1 iff deleting the center preserves topology.
int connectivity_number(std::uint8_t m) noexcept {
  int n = 0;
  for (int k = 0; k < 8; k += 2) {
    const int x0 = !bit(m, k);
    const int x1 = !bit(m, k + 1);
    const int x2 = !bit(m, k + 2);
    n += x0 - x0 * x1 * x2;
  }
  return n;
}

int popcount(std::uint8_t m) noexcept {
  int n = 0;
  for (; m; m &= static_cast<std::uint8_t>(m - 1)) ++n;
  return n;
}

bool zhang_suen_candidate(std::uint8_t m, bool first_subpass) noexcept {
  const int b = popcount(m);
  if (b < 2 || b > 6 || transitions(m) != 1) return false;
  const bool n = bit(m, Nb::N), e = bit(m, Nb::E), s = bit(m, Nb::S), w = bit(m, Nb::W);
  if (first_subpass) return !(n && e && s) && !(e && s && w);
  return !(n && e && w) && !(n && s && w);
}

bool thinning_subpass(BinaryImage& img, bool first_subpass) {
  std::vector<std::pair<int, int>> candidates;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.at(r, c) && zhang_suen_candidate(ring_mask(img, r, c), first_subpass)) candidates.emplace_back(r, c);
    }
  }
  bool changed = false;
  for (auto [r, c] : candidates) {
    const std::uint8_t m = ring_mask(img, r, c);
    if (popcount(m) >= 2 && connectivity_number(m) == 1) {
      img.at(r, c) = 0;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

Neighborhood3x3 Neighborhood3x3::at(const BinaryImage& img, int row, int col) noexcept {
  Neighborhood3x3 nb;
  nb.center = img.get_or_zero(row, col) != 0;
  for (std::size_t k = 0; k < 8; ++k) nb.neighbors[k] = img.get_or_zero(row + kRowOffset[k], col + kColOffset[k]) != 0;
  return nb;
}

std::uint8_t Neighborhood3x3::mask() const noexcept {
  std::uint8_t m = 0;
  for (std::size_t k = 0; k < 8; ++k) m |= static_cast<std::uint8_t>(neighbors[k] ? 1U << k : 0U);
  return m;
}

int Neighborhood3x3::count() const noexcept { return popcount(mask()); }

int ring_components(std::uint8_t mask) noexcept {
  static const auto table = build_ring_component_table();
  return table[mask];
}

BinaryImage bridge(const BinaryImage& img) {
  require_ink_is_one(img, "bridge");
  BinaryImage out = img;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!img.at(r, c) && ring_components(ring_mask(img, r, c)) >= 2) out.at(r, c) = 1;
    }
  }
  return out;
}

BinaryImage remove_interior(const BinaryImage& img) {
  require_ink_is_one(img, "remove");
  BinaryImage out = img;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.at(r, c) && img.get_or_zero(r - 1, c) && img.get_or_zero(r + 1, c) && img.get_or_zero(r, c - 1) &&
          img.get_or_zero(r, c + 1)) {
        out.at(r, c) = 0;
      }
    }
  }
  return out;
}

BinaryImage skeletonize(const BinaryImage& img) {
  require_ink_is_one(img, "skeletonize");
  BinaryImage out = img;
  for (;;) {
    const bool first = thinning_subpass(out, true);
    const bool second = thinning_subpass(out, false);
    if (!first && !second) break;
  }
  return out;
}

}  // namespace sigroi
