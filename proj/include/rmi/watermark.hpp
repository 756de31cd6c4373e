#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmi/error.hpp"
#include "rmi/image.hpp"
#include "rmi/key.hpp"
#include "rmi/metrics.hpp"

namespace rmi {

/// Brightest host pixel that can take the largest key entry without
/// leaving the 8-bit range: 245 + 10 == 255.
inline constexpr std::uint8_t kMaxEmbeddablePixel = 245;

/// Raw pixel-wise difference between a watermarked image and a reference.
/// Values may fall outside the key range after an attack; in_range()
/// reports whether every value still lies in [0, kKeyEntryMax].
class DiffMatrix {
 public:
  DiffMatrix(int width, int height, std::vector<int> values)
      : width_(width), height_(height), values_(std::move(values)) {
    if (width_ < 1 || height_ < 1) {
      fail(ErrorKind::ZeroDimension, "diff dimensions must be positive");
    }
    if (values_.size() != static_cast<std::size_t>(width_) *
                              static_cast<std::size_t>(height_)) {
      fail(ErrorKind::LengthMismatch, "diff value count does not match shape");
    }
    in_range_ = true;
    for (const int v : values_) {
      if (v < 0 || v > kKeyEntryMax) {
        in_range_ = false;
        break;
      }
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::span<const int> values() const noexcept { return values_; }
  bool in_range() const noexcept { return in_range_; }

 private:
  int width_;
  int height_;
  std::vector<int> values_;
  bool in_range_;
};

enum class Decision { Present, Absent };

struct VerificationReport {
  bool exact_match = false;
  double match_ratio = 0.0;
  double ncc = 0.0;
  double threshold = 0.0;
  Decision decision = Decision::Absent;
};

inline void require_key_shape(const GrayImage& image, const RmiKey& key,
                              const char* op) {
  if (image.width() != key.width() || image.height() != key.height()) {
    fail(ErrorKind::DimensionMismatch,
         std::string(op) + ": image is " + std::to_string(image.width()) + "x" +
             std::to_string(image.height()) + " but key is " +
             std::to_string(key.width()) + "x" + std::to_string(key.height()));
  }
}

/// Pixel-wise addition of the key onto the host, exact and unclamped.
/// Hosts with any pixel above 245 are rejected so the sum stays in [0,255].
inline GrayImage embed(const GrayImage& host, const RmiKey& key) {
  require_key_shape(host, key, "embed");
  const auto pixels = host.pixels();
  const auto entries = key.entries();
  std::vector<std::uint8_t> out(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (pixels[i] > kMaxEmbeddablePixel) {
      const int x = static_cast<int>(i % static_cast<std::size_t>(host.width()));
      const int y = static_cast<int>(i / static_cast<std::size_t>(host.width()));
      fail(ErrorKind::PixelTooBright,
           "embed: host pixel (" + std::to_string(x) + "," + std::to_string(y) +
               ") is " + std::to_string(pixels[i]) + ", above the embeddable "
               "maximum " + std::to_string(kMaxEmbeddablePixel));
    }
    out[i] = static_cast<std::uint8_t>(pixels[i] + entries[i]);
  }
  return GrayImage(host.width(), host.height(), std::move(out));
}

/// Pixel-wise subtraction of the key from a watermarked image. A negative
/// result means the image was altered or the key is wrong.
inline GrayImage recover_original(const GrayImage& watermarked,
                                  const RmiKey& key) {
  require_key_shape(watermarked, key, "recover");
  const auto pixels = watermarked.pixels();
  const auto entries = key.entries();
  std::vector<std::uint8_t> out(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const int d = static_cast<int>(pixels[i]) - static_cast<int>(entries[i]);
    if (d < 0) {
      const int x =
          static_cast<int>(i % static_cast<std::size_t>(watermarked.width()));
      const int y =
          static_cast<int>(i / static_cast<std::size_t>(watermarked.width()));
      fail(ErrorKind::NegativePixel,
           "recover: pixel (" + std::to_string(x) + "," + std::to_string(y) +
               ") would be " + std::to_string(d) +
               "; the image was altered or the key is wrong");
    }
    out[i] = static_cast<std::uint8_t>(d);
  }
  return GrayImage(watermarked.width(), watermarked.height(), std::move(out));
}

/// Pixel-wise difference watermarked - original. Out-of-range values are
/// legitimate on attacked inputs, so they are reported, never rejected.
inline DiffMatrix extract_watermark(const GrayImage& watermarked,
                                    const GrayImage& original) {
  require_same_shape(watermarked, original, "extract");
  const auto pw = watermarked.pixels();
  const auto po = original.pixels();
  std::vector<int> values(pw.size());
  for (std::size_t i = 0; i < pw.size(); ++i) {
    values[i] = static_cast<int>(pw[i]) - static_cast<int>(po[i]);
  }
  return DiffMatrix(watermarked.width(), watermarked.height(),
                    std::move(values));
}

/// Extracts the difference matrix and scores it against the key: the match
/// ratio is the share of positions equal to the key entry, and the decision
/// is Present iff that ratio reaches the threshold.
inline VerificationReport verify(const GrayImage& watermarked,
                                 const GrayImage& original, const RmiKey& key,
                                 double threshold = 0.8) {
  require_same_shape(watermarked, original, "verify");
  require_key_shape(watermarked, key, "verify");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    fail(ErrorKind::InvalidThreshold, "verify: threshold must lie in [0,1]");
  }
  const DiffMatrix diff = extract_watermark(watermarked, original);
  const auto values = diff.values();
  const auto entries = key.entries();
  std::size_t matches = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == static_cast<int>(entries[i])) ++matches;
  }
  VerificationReport report;
  report.match_ratio =
      static_cast<double>(matches) / static_cast<double>(values.size());
  report.exact_match = matches == values.size();
  report.ncc = ncc(values, entries);
  report.threshold = threshold;
  report.decision = report.match_ratio >= threshold ? Decision::Present
                                                    : Decision::Absent;
  return report;
}

}  // namespace rmi
