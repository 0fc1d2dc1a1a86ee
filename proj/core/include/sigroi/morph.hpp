#pragma once

#include <array>
#include <cstdint>

#include "sigroi/image.hpp"

namespace sigroi {

/// A pixel and its eight neighbors. Out-of-bounds neighbors read as 0.
///
/// Neighbor order is clockwise starting north:
/// 0 = N, 1 = NE, 2 = E, 3 = SE, 4 = S, 5 = SW, 6 = W, 7 = NW.
struct Neighborhood3x3 {
  enum Direction : int { N = 0, NE, E, SE, S, SW, W, NW };

  static constexpr std::array<int, 8> kRowOffset{-1, -1, 0, 1, 1, 1, 0, -1};
  static constexpr std::array<int, 8> kColOffset{0, 1, 1, 1, 0, -1, -1, -1};

  bool center = false;
  std::array<bool, 8> neighbors{};

  static Neighborhood3x3 at(const BinaryImage& img, int row, int col) noexcept;

  /// Neighbor bits packed LSB-first in the order above.
  std::uint8_t mask() const noexcept;
  int count() const noexcept;
};

/// Number of 8-connected components formed by the set neighbors of an
/// 8-neighbor mask, with the center excluded.
int ring_components(std::uint8_t mask) noexcept;

// The three operators below require ink=1 input and throw ConventionError
// otherwise. bridge and remove read only the input snapshot.

/// Sets a 0 pixel when its set neighbors fall into two or more 8-connected
/// groups (center excluded). Existing 1s are kept.
BinaryImage bridge(const BinaryImage& img);

/// Clears 1 pixels whose four 4-neighbors are all 1, leaving outlines.
BinaryImage remove_interior(const BinaryImage& img);

/// Zhang-Suen two-subpass thinning run to a fixpoint.
///
/// Each subpass selects candidates with the Zhang-Suen tests against the
/// subpass snapshot, then deletes them in raster order, skipping any candidate
/// that is no longer a simple point (8-connected foreground, 4-connected
/// background) or has become an end point. The guard keeps 2x2 blocks and
/// two-pixel-thick diagonals from vanishing, so the foreground component
/// count and the background hole count never change.
BinaryImage skeletonize(const BinaryImage& img);

}  // namespace sigroi
