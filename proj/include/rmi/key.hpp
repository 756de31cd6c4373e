#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmi/error.hpp"
#include "rmi/prng.hpp"

namespace rmi {

/// Largest legal key entry; entries lie in [0, kKeyEntryMax].
inline constexpr int kKeyEntryMax = 10;

/// The secret watermark: a matrix of small integers in [0,10], either
/// regenerable from a 64-bit seed or supplied explicitly. Values are
/// immutable after construction.
class RmiKey {
 public:
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  std::size_t entry_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  std::span<const std::uint8_t> entries() const noexcept { return entries_; }

  /// Engaged iff the key was produced by generate_key.
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  /// Entry at column x, row y.
  std::uint8_t at(int x, int y) const noexcept {
    return entries_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                    static_cast<std::size_t>(x)];
  }

  bool operator==(const RmiKey&) const = default;

  friend RmiKey generate_key(int width, int height, std::uint64_t seed);
  friend RmiKey key_from_matrix(std::span<const int> entries, int width,
                                int height);

 private:
  RmiKey(int width, int height, std::vector<std::uint8_t> entries,
         std::optional<std::uint64_t> seed)
      : width_(width), height_(height), entries_(std::move(entries)),
        seed_(seed) {}

  int width_;
  int height_;
  std::vector<std::uint8_t> entries_;
  std::optional<std::uint64_t> seed_;
};

/// Fills a width×height key row-major from the SplitMix64 stream started at
/// `seed`; each entry is the next value mod 11. The result is bit-identical
/// for identical arguments on every platform.
inline RmiKey generate_key(int width, int height, std::uint64_t seed) {
  if (width < 1 || height < 1) {
    fail(ErrorKind::ZeroDimension,
         "key dimensions must be positive, got " + std::to_string(width) + "x" +
             std::to_string(height));
  }
  const auto count =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> entries;
  entries.reserve(count);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    entries.push_back(
        static_cast<std::uint8_t>(rng.next() % (kKeyEntryMax + 1)));
  }
  return RmiKey(width, height, std::move(entries), seed);
}

/// Validates an explicit entry matrix (row-major) as a key.
inline RmiKey key_from_matrix(std::span<const int> entries, int width,
                              int height) {
  if (width < 1 || height < 1) {
    fail(ErrorKind::ZeroDimension,
         "key dimensions must be positive, got " + std::to_string(width) + "x" +
             std::to_string(height));
  }
  const auto count =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (entries.size() != count) {
    fail(ErrorKind::LengthMismatch,
         "key matrix holds " + std::to_string(entries.size()) +
             " entries, expected " + std::to_string(count));
  }
  std::vector<std::uint8_t> checked;
  checked.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (entries[i] < 0 || entries[i] > kKeyEntryMax) {
      fail(ErrorKind::EntryOutOfRange,
           "key entry " + std::to_string(entries[i]) + " at index " +
               std::to_string(i) + " is outside [0," +
               std::to_string(kKeyEntryMax) + "]");
    }
    checked.push_back(static_cast<std::uint8_t>(entries[i]));
  }
  return RmiKey(width, height, std::move(checked), std::nullopt);
}

}  // namespace rmi
