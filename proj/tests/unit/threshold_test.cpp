#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigroi/errors.hpp"
#include "sigroi/threshold.hpp"

namespace sigroi {
namespace {

Histogram256 random_histogram(std::mt19937_64& rng) {
  Histogram256 h;
  const int occupied = 2 + static_cast<int>(rng() % 60);
  for (int i = 0; i < occupied; ++i) h.counts[rng() % 256] += 1 + rng() % 500;
  return h;
}

TEST(Histogram, CountsLevels) {
  const Histogram256 zeros = histogram(GrayImage(2, 2, 0));
  EXPECT_EQ(zeros.counts[0], 4u);
  EXPECT_EQ(zeros.total(), 4u);

  const Histogram256 h = histogram(GrayImage(2, 2, {0, 0, 255, 255}));
  EXPECT_EQ(h.counts[0], 2u);
  EXPECT_EQ(h.counts[255], 2u);
  EXPECT_EQ(h.occupied_bins(), 2);
}

TEST(Histogram, SumsToPixelCount) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(histogram(testing::random_gray(rng, 64, 64)).total(), 4096u);
}

TEST(Otsu, FlatObjectiveTakesMeanOfArgmax) {
  // Two equal spikes at 0 and 255: every t in [0, 254] separates them
  // identically, so the argmax set is {0..254} with mean 127.
  Histogram256 h;
  h.counts[0] = 2048;
  h.counts[255] = 2048;
  const auto t = otsu_threshold(h);
  EXPECT_EQ(t.level, 127);
  EXPECT_FALSE(t.degenerate);
  EXPECT_DOUBLE_EQ(t.normalized, 127.0 / 255.0);
}

TEST(Otsu, SingleBinIsDegenerate) {
  Histogram256 h;
  h.counts[7] = 100;
  const auto t = otsu_threshold(h);
  EXPECT_EQ(t.level, 7);
  EXPECT_TRUE(t.degenerate);
}

TEST(Otsu, EmptyHistogramThrows) { EXPECT_THROW(otsu_threshold(Histogram256{}), EmptyInputError); }

TEST(Otsu, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Histogram256 h = random_histogram(rng);
    EXPECT_EQ(otsu_threshold(h).level, testing::brute_force_otsu(h).level) << "histogram #" << i;
  }
}

TEST(Otsu, InvariantUnderCountScaling) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const Histogram256 h = random_histogram(rng);
    const int level = otsu_threshold(h).level;
    for (std::uint64_t k : {2u, 3u, 17u, 1000u}) {
      Histogram256 scaled = h;
      for (auto& c : scaled.counts) c *= k;
      EXPECT_EQ(otsu_threshold(scaled).level, level);
    }
  }
}

TEST(Otsu, TwoSpikesSplitBetweenThem) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const int a = static_cast<int>(rng() % 255);
    const int b = a + 1 + static_cast<int>(rng() % (255 - a));
    Histogram256 h;
    h.counts[a] = 1 + rng() % 1000;
    h.counts[b] = 1 + rng() % 1000;
    const int level = otsu_threshold(h).level;
    EXPECT_GE(level, a);
    EXPECT_LE(level, b - 1);
  }
}

TEST(Otsu, ValuesNormalizeIntoUnitInterval) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto t = otsu_threshold(random_histogram(rng));
    EXPECT_GE(t.normalized, 0.0);
    EXPECT_LE(t.normalized, 1.0);
    EXPECT_EQ(t.normalized, t.level / 255.0);
  }
}

TEST(Binarize, WhitePagePatchIsAllOnes) {
  const GrayImage patch(3, 9, {240, 253, 255, 255, 255, 255, 249, 252, 252, 250, 255, 253, 255, 254,
                               253, 249, 250, 252, 255, 252, 254, 255, 253, 254, 249, 253, 254});
  const BinaryImage b = binarize(patch, ThresholdResult::from_level(127));
  EXPECT_EQ(b.count_ones(), 27u);
  EXPECT_EQ(b.convention(), Convention::BackgroundIsOne);
}

TEST(Binarize, StrictlyAboveLevel) {
  const BinaryImage b = binarize(GrayImage(3, 1, {100, 150, 127}), ThresholdResult::from_level(127));
  EXPECT_EQ(b.at(0, 0), 0);
  EXPECT_EQ(b.at(0, 1), 1);
  EXPECT_EQ(b.at(0, 2), 0);
  EXPECT_EQ(binarize(GrayImage(4, 4, 0), ThresholdResult::from_level(0)).count_ones(), 0u);
}

TEST(Binarize, MonotoneInLevel) {
  std::mt19937_64 rng(19);
  const GrayImage img = testing::random_gray(rng, 32, 32);
  for (int lo = 0; lo < 255; lo += 17) {
    const int hi = lo + static_cast<int>(rng() % (256 - lo));
    const BinaryImage a = binarize(img, ThresholdResult::from_level(lo));
    const BinaryImage b = binarize(img, ThresholdResult::from_level(hi));
    for (std::size_t i = 0; i < a.pixel_count(); ++i) EXPECT_LE(b.bits()[i], a.bits()[i]);
  }
}

}  // namespace
}  // namespace sigroi
