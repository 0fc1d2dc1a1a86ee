#pragma once

#include "sigroi/image.hpp"

namespace sigroi {

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
GrayImage rgb_to_gray(const RgbImage& img);

}  // namespace sigroi
