#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmi/error.hpp"
#include "rmi/image.hpp"
#include "rmi/prng.hpp"

namespace rmi {

enum class AttackKind { Identity, UniformNoise, SaltPepper, CropFill, Quantize };

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

/// A named, deterministic image corruption. Stochastic kinds draw from the
/// SplitMix64 stream started at `seed`, a fixed number of draws per pixel in
/// row-major order, so results are reproducible across implementations.
struct AttackSpec {
  AttackKind kind = AttackKind::Identity;
  int amplitude = 0;          // uniform_noise: max |perturbation|
  double density = 0.0;       // salt_pepper: corruption probability
  Rect rect;                  // crop_fill: region to overwrite
  std::uint8_t fill = 0;      // crop_fill: replacement value
  int levels = 256;           // quantize: number of levels in [2,256]
  std::uint64_t seed = 0;     // uniform_noise, salt_pepper

  static AttackSpec identity() { return {}; }

  static AttackSpec uniform_noise(int amplitude, std::uint64_t seed) {
    AttackSpec s;
    s.kind = AttackKind::UniformNoise;
    s.amplitude = amplitude;
    s.seed = seed;
    return s;
  }

  static AttackSpec salt_pepper(double density, std::uint64_t seed) {
    AttackSpec s;
    s.kind = AttackKind::SaltPepper;
    s.density = density;
    s.seed = seed;
    return s;
  }

  static AttackSpec crop_fill(Rect rect, std::uint8_t fill) {
    AttackSpec s;
    s.kind = AttackKind::CropFill;
    s.rect = rect;
    s.fill = fill;
    return s;
  }

  static AttackSpec quantize(int levels) {
    AttackSpec s;
    s.kind = AttackKind::Quantize;
    s.levels = levels;
    return s;
  }
};

namespace attack_detail {

inline GrayImage uniform_noise(const GrayImage& image, int amplitude,
                               std::uint64_t seed) {
  if (amplitude < 0) {
    fail(ErrorKind::InvalidSpec, "uniform_noise amplitude must be >= 0");
  }
  const std::uint64_t span = 2ULL * static_cast<std::uint64_t>(amplitude) + 1;
  SplitMix64 rng(seed);
  const auto pixels = image.pixels();
  std::vector<std::uint8_t> out(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const std::int64_t delta =
        static_cast<std::int64_t>(rng.next() % span) - amplitude;
    const std::int64_t v =
        std::clamp<std::int64_t>(pixels[i] + delta, 0, 255);
    out[i] = static_cast<std::uint8_t>(v);
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

inline GrayImage salt_pepper(const GrayImage& image, double density,
                             std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    fail(ErrorKind::InvalidSpec, "salt_pepper density must lie in [0,1]");
  }
  SplitMix64 rng(seed);
  const auto pixels = image.pixels();
  std::vector<std::uint8_t> out(pixels.begin(), pixels.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double u =
        static_cast<double>(rng.next() & 0xFFFFFFFFULL) / 4294967296.0;
    if (u < density) {
      out[i] = rng.next() % 2 == 0 ? 0 : 255;
    }
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

inline GrayImage crop_fill(const GrayImage& image, Rect rect,
                           std::uint8_t fill) {
  if (rect.w < 0 || rect.h < 0) {
    fail(ErrorKind::InvalidSpec, "crop_fill rect sides must be >= 0");
  }
  if (rect.x < 0 || rect.y < 0 ||
      static_cast<long long>(rect.x) + rect.w > image.width() ||
      static_cast<long long>(rect.y) + rect.h > image.height()) {
    fail(ErrorKind::RectOutOfBounds,
         "crop_fill rect " + std::to_string(rect.w) + "x" +
             std::to_string(rect.h) + " at (" + std::to_string(rect.x) + "," +
             std::to_string(rect.y) + ") leaves the " +
             std::to_string(image.width()) + "x" +
             std::to_string(image.height()) + " image");
  }
  const auto pixels = image.pixels();
  std::vector<std::uint8_t> out(pixels.begin(), pixels.end());
  for (int y = rect.y; y < rect.y + rect.h; ++y) {
    for (int x = rect.x; x < rect.x + rect.w; ++x) {
      out[static_cast<std::size_t>(y) * static_cast<std::size_t>(image.width()) +
          static_cast<std::size_t>(x)] = fill;
    }
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

inline GrayImage quantize(const GrayImage& image, int levels) {
  if (levels < 2 || levels > 256) {
    fail(ErrorKind::InvalidSpec, "quantize levels must lie in [2,256]");
  }
  const int step = 256 / levels;
  const auto pixels = image.pixels();
  std::vector<std::uint8_t> out(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(pixels[i] / step * step);
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

}  // namespace attack_detail

/// Applies `spec` to `image`. Deterministic for a fixed (image, spec) pair.
inline GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec) {
  switch (spec.kind) {
    case AttackKind::Identity:
      return image;
    case AttackKind::UniformNoise:
      return attack_detail::uniform_noise(image, spec.amplitude, spec.seed);
    case AttackKind::SaltPepper:
      return attack_detail::salt_pepper(image, spec.density, spec.seed);
    case AttackKind::CropFill:
      return attack_detail::crop_fill(image, spec.rect, spec.fill);
    case AttackKind::Quantize:
      return attack_detail::quantize(image, spec.levels);
  }
  fail(ErrorKind::InvalidSpec, "unknown attack kind");
}

}  // namespace rmi
