#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rmi/error.hpp"
#include "rmi/image.hpp"

namespace rmi {

enum class PgmVariant { Binary, Ascii };

namespace pgm_detail {

// Header whitespace is exactly space, tab, or newline.
inline bool is_space(std::uint8_t c) noexcept {
  return c == ' ' || c == '\t' || c == '\n';
}

inline bool is_digit(std::uint8_t c) noexcept { return c >= '0' && c <= '9'; }

// Skips whitespace and '#' comments. Comments run to the end of the line
// and are only legal between header tokens.
inline void skip_header_filler(std::span<const std::uint8_t> bytes,
                               std::size_t& pos) {
  while (pos < bytes.size()) {
    if (is_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

inline std::uint64_t read_header_number(std::span<const std::uint8_t> bytes,
                                        std::size_t& pos, const char* what) {
  skip_header_filler(bytes, pos);
  if (pos >= bytes.size() || !is_digit(bytes[pos])) {
    fail(ErrorKind::MalformedHeader,
         std::string("PGM header: ") + what + " is not a decimal integer");
  }
  std::uint64_t value = 0;
  while (pos < bytes.size() && is_digit(bytes[pos])) {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 0xFFFFFFFFULL) {
      fail(ErrorKind::MalformedHeader,
           std::string("PGM header: ") + what + " is too large");
    }
    ++pos;
  }
  if (pos < bytes.size() && !is_space(bytes[pos]) && bytes[pos] != '#') {
    fail(ErrorKind::MalformedHeader,
         std::string("PGM header: ") + what + " is not a decimal integer");
  }
  return value;
}

}  // namespace pgm_detail

/// Strict parser for 8-bit PGM streams, magic "P5" (binary) or "P2" (ASCII).
/// The declared maxval must be exactly 255 and the payload must hold exactly
/// width*height pixels; anything short, long, or out of range is an error.
inline GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  using namespace pgm_detail;
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '5' && bytes[1] != '2')) {
    fail(ErrorKind::MalformedHeader, "PGM header: magic is not P5 or P2");
  }
  const bool binary = bytes[1] == '5';
  std::size_t pos = 2;
  if (pos >= bytes.size() || (!is_space(bytes[pos]) && bytes[pos] != '#')) {
    fail(ErrorKind::MalformedHeader,
         "PGM header: magic is not followed by whitespace");
  }

  const std::uint64_t width = read_header_number(bytes, pos, "width");
  const std::uint64_t height = read_header_number(bytes, pos, "height");
  const std::uint64_t maxval = read_header_number(bytes, pos, "maxval");
  if (width < 1 || height < 1) {
    fail(ErrorKind::MalformedHeader, "PGM header: dimensions must be positive");
  }
  if (width > 0x7FFFFFFFULL || height > 0x7FFFFFFFULL) {
    fail(ErrorKind::MalformedHeader, "PGM header: dimensions are too large");
  }
  if (maxval != 255) {
    fail(ErrorKind::MalformedHeader,
         "PGM header: maxval is " + std::to_string(maxval) +
             ", only 255 is supported");
  }
  const std::uint64_t need = width * height;

  std::vector<std::uint8_t> pixels;
  if (binary) {
    // Exactly one whitespace byte separates the header from the payload.
    if (pos >= bytes.size() || !is_space(bytes[pos])) {
      fail(ErrorKind::MalformedHeader,
           "PGM header: missing separator before binary payload");
    }
    ++pos;
    const std::uint64_t have = bytes.size() - pos;
    if (have < need) {
      fail(ErrorKind::TruncatedPayload,
           "PGM payload: have " + std::to_string(have) + " bytes, need " +
               std::to_string(need));
    }
    if (have > need) {
      fail(ErrorKind::TrailingData,
           "PGM payload: " + std::to_string(have - need) +
               " trailing bytes after pixel data");
    }
    pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
  } else {
    pixels.reserve(static_cast<std::size_t>(
        need < bytes.size() ? need : static_cast<std::uint64_t>(bytes.size())));
    std::uint64_t count = 0;
    while (true) {
      while (pos < bytes.size() && is_space(bytes[pos])) ++pos;
      if (pos >= bytes.size()) break;
      if (!is_digit(bytes[pos])) {
        fail(ErrorKind::MalformedPayload,
             "PGM payload: pixel token is not a decimal integer");
      }
      std::uint64_t value = 0;
      while (pos < bytes.size() && is_digit(bytes[pos])) {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 100000) break;  // already out of range, stop accumulating
        ++pos;
      }
      if (pos < bytes.size() && !is_space(bytes[pos])) {
        if (is_digit(bytes[pos])) {
          fail(ErrorKind::ValueOutOfRange,
               "PGM payload: pixel value exceeds 255");
        }
        fail(ErrorKind::MalformedPayload,
             "PGM payload: pixel token is not a decimal integer");
      }
      if (value > 255) {
        fail(ErrorKind::ValueOutOfRange,
             "PGM payload: pixel value " + std::to_string(value) +
                 " exceeds 255");
      }
      if (count == need) {
        fail(ErrorKind::TrailingData,
             "PGM payload: more pixel tokens than width*height");
      }
      pixels.push_back(static_cast<std::uint8_t>(value));
      ++count;
    }
    if (count < need) {
      fail(ErrorKind::TruncatedPayload,
           "PGM payload: have " + std::to_string(count) + " pixels, need " +
               std::to_string(need));
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

/// Binary output is exactly "P5\n<w> <h>\n255\n" followed by the raw pixels;
/// ASCII output is the same header under "P2" with one text row per image row.
inline std::vector<std::uint8_t> save_pgm(const GrayImage& image,
                                          PgmVariant variant) {
  std::string text = variant == PgmVariant::Binary ? "P5\n" : "P2\n";
  text += std::to_string(image.width()) + " " + std::to_string(image.height()) +
          "\n255\n";
  std::vector<std::uint8_t> out(text.begin(), text.end());
  const auto pixels = image.pixels();
  if (variant == PgmVariant::Binary) {
    out.insert(out.end(), pixels.begin(), pixels.end());
  } else {
    std::string row;
    for (int y = 0; y < image.height(); ++y) {
      row.clear();
      for (int x = 0; x < image.width(); ++x) {
        if (x > 0) row += ' ';
        row += std::to_string(image.at(x, y));
      }
      row += '\n';
      out.insert(out.end(), row.begin(), row.end());
    }
  }
  return out;
}

}  // namespace rmi
