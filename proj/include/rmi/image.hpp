#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmi/error.hpp"

namespace rmi {

/// An 8-bit grayscale image. Pixels are stored row-major and are never
/// mutated after construction; every operation returns a new image.
class GrayImage {
 public:
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ < 1 || height_ < 1) {
      fail(ErrorKind::ZeroDimension,
           "image dimensions must be positive, got " + std::to_string(width_) +
               "x" + std::to_string(height_));
    }
    if (pixels_.size() != pixel_count()) {
      fail(ErrorKind::LengthMismatch,
           "pixel buffer holds " + std::to_string(pixels_.size()) +
               " values, expected " + std::to_string(pixel_count()));
    }
  }

  static GrayImage filled(int width, int height, std::uint8_t value) {
    const auto count =
        static_cast<std::size_t>(width > 0 ? width : 0) *
        static_cast<std::size_t>(height > 0 ? height : 0);
    return GrayImage(width, height, std::vector<std::uint8_t>(count, value));
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  /// Pixel at column x, row y. Bounds are the caller's responsibility.
  std::uint8_t at(int x, int y) const noexcept {
    return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(x)];
  }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

inline bool same_shape(const GrayImage& a, const GrayImage& b) noexcept {
  return a.width() == b.width() && a.height() == b.height();
}

inline void require_same_shape(const GrayImage& a, const GrayImage& b,
                               const char* op) {
  if (!same_shape(a, b)) {
    fail(ErrorKind::DimensionMismatch,
         std::string(op) + ": dimension mismatch, " + std::to_string(a.width()) +
             "x" + std::to_string(a.height()) + " vs " +
             std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
}

/// The w×h sub-grid of `image` whose top-left corner sits at column x, row y.
inline GrayImage extract_block(const GrayImage& image, int x, int y, int w,
                               int h) {
  if (x < 0 || y < 0 || w < 1 || h < 1 ||
      static_cast<long long>(x) + w > image.width() ||
      static_cast<long long>(y) + h > image.height()) {
    fail(ErrorKind::BlockOutOfBounds,
         "block " + std::to_string(w) + "x" + std::to_string(h) + " at (" +
             std::to_string(x) + "," + std::to_string(y) +
             ") does not fit inside a " + std::to_string(image.width()) + "x" +
             std::to_string(image.height()) + " image");
  }
  std::vector<std::uint8_t> block;
  block.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int row = y; row < y + h; ++row) {
    for (int col = x; col < x + w; ++col) {
      block.push_back(image.at(col, row));
    }
  }
  return GrayImage(w, h, std::move(block));
}

}  // namespace rmi
