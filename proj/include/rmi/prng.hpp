#pragma once

#include <cstdint>

namespace rmi {

// SplitMix64, after Sebastiano Vigna's public-domain splitmix64.c.
// The state is explicit so a step is a pure value-to-value function;
// identical states always produce identical streams, on every platform.

struct PrngState {
  std::uint64_t state = 0;

  bool operator==(const PrngState&) const = default;
};

struct PrngResult {
  std::uint64_t value;
  PrngState next;
};

constexpr PrngResult prng_next(PrngState s) noexcept {
  const std::uint64_t advanced = s.state + 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = advanced;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return PrngResult{z ^ (z >> 31), PrngState{advanced}};
}

// Stateful convenience wrapper around prng_next.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_{seed} {}

  constexpr std::uint64_t next() noexcept {
    const PrngResult r = prng_next(state_);
    state_ = r.next;
    return r.value;
  }

 private:
  PrngState state_;
};

}  // namespace rmi
