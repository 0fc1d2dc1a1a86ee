#include <gtest/gtest.h>

#include <set>
#include <string>

#include "sigroi/synth.hpp"

namespace sigroi {
namespace {

TEST(Synth, SameSeedSameImage) { EXPECT_EQ(generate_signature(7), generate_signature(7)); }

TEST(Synth, TabletGeometry) {
  const RgbImage img = generate_signature(0);
  EXPECT_EQ(img.width(), 610);
  EXPECT_EQ(img.height(), 410);
}

TEST(Synth, DarkInkOnLightPaperInEveryChannel) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RgbImage img = generate_signature(seed);
    for (int k = 0; k < 3; ++k) {
      bool dark = false;
      bool light = false;
      for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        const auto v = img.pixels()[3 * i + k];
        dark |= v < 100;
        light |= v > 230;
      }
      EXPECT_TRUE(dark) << "seed " << seed << " channel " << k;
      EXPECT_TRUE(light) << "seed " << seed << " channel " << k;
    }
  }
}

TEST(Synth, InkStaysInTheCentralHalf) {
  const BoundingBox region = ink_region(kCanvasWidth, kCanvasHeight);
  EXPECT_EQ(region.width(), 305);
  EXPECT_EQ(region.height(), 205);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RgbImage img = generate_signature(seed);
    std::size_t ink = 0;
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        if (img.at(r, c, 0) > 100) continue;
        ++ink;
        EXPECT_TRUE(r >= region.min_row && r <= region.max_row && c >= region.min_col && c <= region.max_col)
            << "seed " << seed << " at " << r << "," << c;
      }
    }
    EXPECT_GT(ink, 100u);
  }
}

TEST(Synth, OneHundredSixtyDistinctSignatures) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const RgbImage img = generate_signature(seed);
    seen.emplace(reinterpret_cast<const char*>(img.pixels().data()), img.pixels().size());
  }
  EXPECT_EQ(seen.size(), 160u);
}

}  // namespace
}  // namespace sigroi
