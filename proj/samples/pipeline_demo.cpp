// End-to-end library walkthrough: generate a key, embed it into a synthetic
// host, corrupt the result, and report how the verification score degrades.

#include <cstdint>
#include <iostream>
#include <vector>

#include "rmi/rmi.hpp"

int main() {
  constexpr int kSize = 64;

  // Diagonal gradient host, comfortably below the embeddable maximum.
  std::vector<std::uint8_t> pixels;
  pixels.reserve(kSize * kSize);
  for (int y = 0; y < kSize; ++y) {
    for (int x = 0; x < kSize; ++x) {
      pixels.push_back(static_cast<std::uint8_t>((x + y) * 245 / (2 * kSize - 2)));
    }
  }
  const rmi::GrayImage host(kSize, kSize, pixels);

  const rmi::RmiKey key = rmi::generate_key(kSize, kSize, 2024);
  const rmi::GrayImage watermarked = rmi::embed(host, key);

  std::cout << "embedding distortion:\n"
            << rmi::format_metrics(rmi::compare_images(host, watermarked));

  const auto clean = rmi::verify(watermarked, host, key);
  std::cout << "clean match_ratio: " << clean.match_ratio << "\n";

  for (const int amplitude : {1, 3, 5}) {
    const auto attacked = rmi::apply_attack(
        watermarked, rmi::AttackSpec::uniform_noise(amplitude, 7));
    const auto report = rmi::verify(attacked, host, key);
    std::cout << "noise amplitude " << amplitude
              << ": match_ratio=" << report.match_ratio
              << " decision="
              << (report.decision == rmi::Decision::Present ? "present"
                                                            : "absent")
              << "\n";
  }

  const rmi::GrayImage recovered = rmi::recover_original(watermarked, key);
  std::cout << "recovered equals host: " << (recovered == host ? "yes" : "no")
            << "\n";
  return 0;
}
