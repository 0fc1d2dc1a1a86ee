#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigroi/errors.hpp"
#include "sigroi/roi.hpp"

namespace sigroi {
namespace {

TEST(ForegroundBbox, SinglePoint) {
  BinaryImage img(5, 5, Convention::InkIsOne);
  img.at(2, 3) = 1;
  EXPECT_EQ(foreground_bbox(img), (BoundingBox{2, 3, 2, 3}));
}

TEST(ForegroundBbox, TwoPoints) {
  BinaryImage img(10, 6, Convention::InkIsOne);
  img.at(1, 2) = 1;
  img.at(4, 7) = 1;
  const BoundingBox box = foreground_bbox(img);
  EXPECT_EQ(box, (BoundingBox{1, 2, 4, 7}));
  const BinaryImage cropped = crop(img, box);
  EXPECT_EQ(cropped.height(), 4);
  EXPECT_EQ(cropped.width(), 6);
  EXPECT_EQ(cropped.at(0, 0), 1);
  EXPECT_EQ(cropped.at(3, 5), 1);
}

TEST(ForegroundBbox, FullImage) {
  const BinaryImage ones(7, 4, Convention::InkIsOne, 1);
  EXPECT_EQ(foreground_bbox(ones), (BoundingBox{0, 0, 3, 6}));
}

TEST(ForegroundBbox, BlankAndConventionErrors) {
  EXPECT_THROW(foreground_bbox(BinaryImage(4, 4, Convention::InkIsOne)), NoForegroundError);
  EXPECT_THROW(foreground_bbox(BinaryImage(4, 4, Convention::BackgroundIsOne, 1)), ConventionError);
  EXPECT_THROW(auto_crop(BinaryImage(4, 4, Convention::InkIsOne)), NoForegroundError);
}

TEST(Crop, IdentityAndSinglePixel) {
  std::mt19937_64 rng(2);
  const GrayImage g = testing::random_gray(rng, 5, 5);
  EXPECT_EQ(crop(g, BoundingBox{0, 0, 4, 4}), g);
  const GrayImage one = crop(g, BoundingBox{2, 3, 2, 3});
  EXPECT_EQ(one.width(), 1);
  EXPECT_EQ(one.height(), 1);
  EXPECT_EQ(one.at(0, 0), g.at(2, 3));
}

TEST(Crop, PixelMapping) {
  RgbImage img(6, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 6; ++c) {
      for (int k = 0; k < 3; ++k) img.at(r, c, k) = static_cast<std::uint8_t>(r * 30 + c * 3 + k);
    }
  }
  const BoundingBox box{1, 2, 3, 4};
  const RgbImage out = crop(img, box);
  for (int r = 0; r < box.height(); ++r) {
    for (int c = 0; c < box.width(); ++c) {
      for (int k = 0; k < 3; ++k) EXPECT_EQ(out.at(r, c, k), img.at(box.min_row + r, box.min_col + c, k));
    }
  }
}

TEST(Crop, OutOfBounds) {
  const GrayImage g(5, 5);
  EXPECT_THROW(crop(g, BoundingBox{0, 0, 5, 4}), BoundsError);
  EXPECT_THROW(crop(g, BoundingBox{-1, 0, 2, 2}), BoundsError);
  EXPECT_THROW(crop(g, BoundingBox{3, 0, 2, 2}), BoundsError);
}

TEST(AutoCrop, InkTouchingAllBordersIsUnchanged) {
  BinaryImage img(6, 5, Convention::InkIsOne);
  img.at(0, 2) = img.at(4, 3) = img.at(2, 0) = img.at(1, 5) = 1;
  EXPECT_EQ(auto_crop(img), img);
}

TEST(AutoCrop, PreservesInkIsTightAndIdempotent) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 50);
    const int h = 1 + static_cast<int>(rng() % 50);
    BinaryImage img = testing::random_binary(rng, w, h, 0.02 + (rng() % 100) / 400.0);
    img.at(static_cast<int>(rng() % h), static_cast<int>(rng() % w)) = 1;
    const BinaryImage out = auto_crop(img);
    EXPECT_EQ(out.count_ones(), img.count_ones());
    EXPECT_EQ(auto_crop(out), out);
    int top = 0, bottom = 0, left = 0, right = 0;
    for (int c = 0; c < out.width(); ++c) {
      top += out.at(0, c);
      bottom += out.at(out.height() - 1, c);
    }
    for (int r = 0; r < out.height(); ++r) {
      left += out.at(r, 0);
      right += out.at(r, out.width() - 1);
    }
    EXPECT_GT(top, 0);
    EXPECT_GT(bottom, 0);
    EXPECT_GT(left, 0);
    EXPECT_GT(right, 0);
  }
}

}  // namespace
}  // namespace sigroi
