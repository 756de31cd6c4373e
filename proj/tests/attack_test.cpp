#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rmi/attack.hpp"
#include "rmi/watermark.hpp"
#include "test_support.hpp"

using rmi::AttackSpec;
using rmi::ErrorKind;
using rmi::GrayImage;
using rmi::Rect;

namespace {

TEST(Attack, IdentityIsBitExact) {
  std::mt19937_64 rng(1);
  const auto img = testsupport::random_image(rng, 13, 7);
  EXPECT_EQ(rmi::apply_attack(img, AttackSpec::identity()), img);
}

TEST(Attack, QuantizeFullLevelsIsNoOp) {
  std::mt19937_64 rng(2);
  const auto img = testsupport::random_image(rng, 9, 9);
  EXPECT_EQ(rmi::apply_attack(img, AttackSpec::quantize(256)), img);
}

TEST(Attack, QuantizeTwoLevels) {
  const GrayImage img(4, 1, {0, 127, 128, 255});
  const auto out = rmi::apply_attack(img, AttackSpec::quantize(2));
  const std::vector<std::uint8_t> expected = {0, 0, 128, 128};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(),
                         out.pixels().begin()));
}

TEST(Attack, QuantizeRejectsBadLevels) {
  const auto img = GrayImage::filled(2, 2, 9);
  for (const int levels : {0, 1, 257, -3}) {
    EXPECT_RMI_ERROR(rmi::apply_attack(img, AttackSpec::quantize(levels)),
                     ErrorKind::InvalidSpec);
  }
}

TEST(Attack, SaltPepperDensityOneSaturatesEveryPixel) {
  std::mt19937_64 rng(3);
  const auto img = testsupport::random_image(rng, 16, 16, 1, 254);
  const auto out = rmi::apply_attack(img, AttackSpec::salt_pepper(1.0, 77));
  for (const auto p : out.pixels()) {
    EXPECT_TRUE(p == 0 || p == 255) << static_cast<int>(p);
  }
}

TEST(Attack, SaltPepperDensityZeroIsNoOp) {
  std::mt19937_64 rng(4);
  const auto img = testsupport::random_image(rng, 10, 10);
  EXPECT_EQ(rmi::apply_attack(img, AttackSpec::salt_pepper(0.0, 77)), img);
}

TEST(Attack, SaltPepperIsDeterministicPerSeed) {
  std::mt19937_64 rng(5);
  const auto img = testsupport::random_image(rng, 32, 32);
  const auto a = rmi::apply_attack(img, AttackSpec::salt_pepper(0.5, 9));
  const auto b = rmi::apply_attack(img, AttackSpec::salt_pepper(0.5, 9));
  EXPECT_EQ(a, b);
  const auto c = rmi::apply_attack(img, AttackSpec::salt_pepper(0.5, 10));
  EXPECT_NE(a, c);
}

TEST(Attack, SaltPepperRejectsBadDensity) {
  const auto img = GrayImage::filled(2, 2, 9);
  EXPECT_RMI_ERROR(rmi::apply_attack(img, AttackSpec::salt_pepper(-0.1, 1)),
                   ErrorKind::InvalidSpec);
  EXPECT_RMI_ERROR(rmi::apply_attack(img, AttackSpec::salt_pepper(1.5, 1)),
                   ErrorKind::InvalidSpec);
}

TEST(Attack, UniformNoiseStaysWithinAmplitude) {
  std::mt19937_64 rng(6);
  const auto img = testsupport::random_image(rng, 24, 24);
  const int amplitude = 5;
  const auto out =
      rmi::apply_attack(img, AttackSpec::uniform_noise(amplitude, 123));
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const int before = img.pixels()[i];
    const int after = out.pixels()[i];
    EXPECT_GE(after, std::max(0, before - amplitude));
    EXPECT_LE(after, std::min(255, before + amplitude));
  }
}

TEST(Attack, UniformNoiseAmplitudeZeroIsNoOp) {
  std::mt19937_64 rng(7);
  const auto img = testsupport::random_image(rng, 8, 8);
  EXPECT_EQ(rmi::apply_attack(img, AttackSpec::uniform_noise(0, 5)), img);
}

TEST(Attack, UniformNoiseIsDeterministicPerSeed) {
  std::mt19937_64 rng(8);
  const auto img = testsupport::random_image(rng, 32, 32);
  const auto a = rmi::apply_attack(img, AttackSpec::uniform_noise(4, 55));
  const auto b = rmi::apply_attack(img, AttackSpec::uniform_noise(4, 55));
  EXPECT_EQ(a, b);
}

TEST(Attack, UniformNoiseRejectsNegativeAmplitude) {
  const auto img = GrayImage::filled(2, 2, 9);
  EXPECT_RMI_ERROR(rmi::apply_attack(img, AttackSpec::uniform_noise(-1, 0)),
                   ErrorKind::InvalidSpec);
}

TEST(Attack, CropFillTouchesExactlyTheRect) {
  std::mt19937_64 rng(9);
  const auto img = testsupport::random_image(rng, 12, 10, 1, 254);
  const Rect rect{3, 2, 5, 4};
  const auto out = rmi::apply_attack(img, AttackSpec::crop_fill(rect, 0));
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const bool inside = x >= rect.x && x < rect.x + rect.w && y >= rect.y &&
                          y < rect.y + rect.h;
      if (inside) {
        EXPECT_EQ(out.at(x, y), 0);
      } else {
        EXPECT_EQ(out.at(x, y), img.at(x, y));
      }
    }
  }
}

TEST(Attack, CropFillWholeImageAndEmptyRect) {
  std::mt19937_64 rng(10);
  const auto img = testsupport::random_image(rng, 6, 6);
  const auto all =
      rmi::apply_attack(img, AttackSpec::crop_fill(Rect{0, 0, 6, 6}, 17));
  EXPECT_EQ(all, GrayImage::filled(6, 6, 17));
  const auto none =
      rmi::apply_attack(img, AttackSpec::crop_fill(Rect{2, 2, 0, 0}, 17));
  EXPECT_EQ(none, img);
}

TEST(Attack, CropFillRejectsOutOfBoundsRect) {
  const auto img = GrayImage::filled(8, 8, 1);
  EXPECT_RMI_ERROR(
      rmi::apply_attack(img, AttackSpec::crop_fill(Rect{4, 4, 5, 2}, 0)),
      ErrorKind::RectOutOfBounds);
  EXPECT_RMI_ERROR(
      rmi::apply_attack(img, AttackSpec::crop_fill(Rect{-1, 0, 2, 2}, 0)),
      ErrorKind::RectOutOfBounds);
  EXPECT_RMI_ERROR(
      rmi::apply_attack(img, AttackSpec::crop_fill(Rect{0, 0, -2, 2}, 0)),
      ErrorKind::InvalidSpec);
}

TEST(Attack, NoiseDegradesMatchRatioMonotonically) {
  std::mt19937_64 rng(11);
  const auto host = testsupport::random_image(rng, 64, 64, 0, 245);
  const auto key = rmi::generate_key(64, 64, 404);
  const auto watermarked = rmi::embed(host, key);

  const auto mean_ratio = [&](int amplitude) {
    double total = 0.0;
    const int seeds = 30;
    for (int s = 0; s < seeds; ++s) {
      const auto attacked = rmi::apply_attack(
          watermarked,
          AttackSpec::uniform_noise(amplitude, static_cast<std::uint64_t>(s)));
      total += rmi::verify(attacked, host, key).match_ratio;
    }
    return total / seeds;
  };

  const auto identity = rmi::apply_attack(watermarked, AttackSpec::identity());
  EXPECT_DOUBLE_EQ(rmi::verify(identity, host, key).match_ratio, 1.0);
  EXPECT_LE(mean_ratio(5), mean_ratio(1));
}

}  // namespace
