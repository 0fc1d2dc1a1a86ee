#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "sigroi/image.hpp"

namespace sigroi {

// Binary netpbm codec: P6 <-> RgbImage, P5 <-> GrayImage, P4 <-> BinaryImage.
//
// P5/P6 require maxval 255. P4 rows are padded to a byte boundary and store
// 1 = black, which maps to ink=1. A background=1 image is inverted on write so
// the file shows the same picture; reading it back yields the ink=1 form.
// Header comments ('#' to end of line) are accepted on read, never written.

std::vector<std::byte> encode_netpbm(const AnyImage& img);
AnyImage decode_netpbm(std::span<const std::byte> data);

AnyImage read_image(const std::filesystem::path& path);
/// Reads any of the three formats and promotes gray/binary rasters to RGB.
RgbImage read_rgb(const std::filesystem::path& path);

void write_image(const AnyImage& img, const std::filesystem::path& path);

/// ".ppm", ".pgm" or ".pbm" for the image kind.
std::string_view netpbm_extension(const AnyImage& img) noexcept;

}  // namespace sigroi
