#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "rmi/image.hpp"
#include "rmi/key.hpp"
#include "rmi/watermark.hpp"

namespace rmi {

/// The built-in 8x8 worked example: a host block, the explicit key block
/// embedded into it, and the watermarked block their addition produces.
struct WorkedExample {
  GrayImage host;
  RmiKey key;
  GrayImage watermarked;
};

inline WorkedExample worked_example() {
  static constexpr std::array<std::uint8_t, 64> kHost = {
      195, 195, 196, 197, 197, 198, 199, 199,  //
      196, 196, 196, 197, 197, 197, 198, 198,  //
      197, 197, 197, 197, 196, 196, 196, 196,  //
      199, 198, 198, 197, 196, 195, 194, 194,  //
      199, 198, 197, 196, 195, 194, 193, 193,  //
      198, 198, 197, 196, 195, 194, 193, 193,  //
      197, 196, 196, 195, 195, 194, 194, 194,  //
      196, 196, 195, 195, 195, 194, 194, 194,
  };
  static constexpr std::array<int, 64> kKey = {
      2, 2, 9, 8, 2, 6, 3, 6,  //
      7, 2, 0, 0, 0, 0, 8, 3,  //
      9, 1, 3, 0, 4, 0, 1, 1,  //
      2, 6, 3, 0, 7, 2, 4, 2,  //
      9, 3, 0, 6, 3, 6, 7, 2,  //
      5, 5, 3, 7, 7, 0, 5, 2,  //
      5, 1, 0, 7, 5, 8, 0, 5,  //
      2, 0, 5, 5, 9, 7, 6, 6,
  };
  static constexpr std::array<std::uint8_t, 64> kWatermarked = {
      197, 197, 205, 205, 199, 204, 202, 205,  //
      203, 198, 196, 197, 197, 197, 206, 201,  //
      206, 198, 200, 197, 200, 196, 197, 197,  //
      201, 204, 201, 197, 203, 197, 198, 196,  //
      208, 201, 197, 202, 198, 200, 200, 195,  //
      203, 203, 200, 203, 202, 194, 198, 195,  //
      202, 197, 196, 202, 200, 202, 194, 199,  //
      198, 196, 200, 200, 204, 201, 200, 200,
  };
  return WorkedExample{
      GrayImage(8, 8, std::vector<std::uint8_t>(kHost.begin(), kHost.end())),
      key_from_matrix(std::span<const int>(kKey), 8, 8),
      GrayImage(8, 8,
                std::vector<std::uint8_t>(kWatermarked.begin(),
                                          kWatermarked.end()))};
}

namespace demo_detail {

template <typename Value>
void print_rows(std::ostream& out, int width, int height,
                std::span<const Value> values) {
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x > 0) out << ' ';
      out << static_cast<int>(
          values[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(x)]);
    }
    out << '\n';
  }
}

}  // namespace demo_detail

/// Re-runs embed, recover and extract over `ex`, printing the host, the key,
/// and the embedded result followed by PASS or FAIL. Returns true only when
/// every stage reproduces the example exactly.
inline bool run_worked_example(std::ostream& out, const WorkedExample& ex) {
  out << "host:\n";
  demo_detail::print_rows(out, ex.host.width(), ex.host.height(),
                          ex.host.pixels());
  out << "key:\n";
  demo_detail::print_rows(out, ex.key.width(), ex.key.height(), ex.key.entries());

  const GrayImage embedded = embed(ex.host, ex.key);
  out << "watermarked:\n";
  demo_detail::print_rows(out, embedded.width(), embedded.height(),
                          embedded.pixels());

  bool ok = embedded == ex.watermarked;
  ok = ok && recover_original(ex.watermarked, ex.key) == ex.host;
  const DiffMatrix diff = extract_watermark(ex.watermarked, ex.host);
  ok = ok && diff.in_range();
  if (ok) {
    const auto values = diff.values();
    const auto entries = ex.key.entries();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] != static_cast<int>(entries[i])) {
        ok = false;
        break;
      }
    }
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

}  // namespace rmi
