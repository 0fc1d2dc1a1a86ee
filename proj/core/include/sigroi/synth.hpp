#pragma once

#include <cstdint>

#include "sigroi/image.hpp"
#include "sigroi/roi.hpp"

namespace sigroi {

/// Acquisition geometry of the tablet scans the generator imitates.
inline constexpr int kCanvasWidth = 610;
inline constexpr int kCanvasHeight = 410;

/// The central half of the canvas in each dimension; all ink lands inside it.
BoundingBox ink_region(int width, int height) noexcept;

/// Deterministic synthetic signature.
///
/// Draws 2-5 strokes, each a chain of 2-4 quadratic Bezier segments traced
/// with a round pen 2-4 px wide, in a dark ink (each channel 0-60) on paper
/// of intensity 245-255 with uniform per-channel noise. The same seed always
/// yields the same pixels, independent of platform.
RgbImage generate_signature(std::uint64_t seed, int width = kCanvasWidth, int height = kCanvasHeight);

}  // namespace sigroi
