#pragma once

#include "sigroi/image.hpp"

namespace sigroi {

/// Bilinear resampling to out_h rows by out_w columns.
///
/// Sample positions use pixel-center alignment, src = (dst + 0.5) * in / out - 0.5,
/// clamped to the image edge. Every output is a convex combination of input
/// samples, so the output range stays inside the input range. Same-size
/// resizing reproduces the input exactly.
///
/// Throws DimensionError when out_h or out_w is below 1.
GrayImage resize_bilinear(const GrayImage& img, int out_h, int out_w);

}  // namespace sigroi
