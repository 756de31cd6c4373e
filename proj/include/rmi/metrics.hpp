#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ranges>
#include <string>

#include "rmi/error.hpp"
#include "rmi/image.hpp"

namespace rmi {

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity exactly when mse == 0
  double ncc = 0.0;
};

/// Mean squared error. The sum of squared differences is accumulated in
/// exact integer arithmetic; only the final division is floating point.
inline double mse(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b, "mse");
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d =
        static_cast<std::int64_t>(pa[i]) - static_cast<std::int64_t>(pb[i]);
    acc += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(acc) / static_cast<double>(a.pixel_count());
}

inline double psnr_from_mse(double mse_value) noexcept {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

/// Peak signal-to-noise ratio against an 8-bit peak of 255, in dB.
inline double psnr(const GrayImage& a, const GrayImage& b) {
  return psnr_from_mse(mse(a, b));
}

/// Normalized cross-correlation of two equal-length value sequences,
/// uncentered: dot(a,b)/sqrt(dot(a,a)*dot(b,b)). Defined as 1 when both
/// sequences are all-zero and 0 when exactly one is.
template <std::ranges::sized_range RangeA, std::ranges::sized_range RangeB>
double ncc(const RangeA& a, const RangeB& b) {
  const std::size_t n = std::ranges::size(a);
  if (n != std::ranges::size(b)) {
    fail(ErrorKind::LengthMismatch,
         "ncc: sequences have lengths " + std::to_string(n) + " and " +
             std::to_string(std::ranges::size(b)));
  }
  if (n == 0) fail(ErrorKind::EmptyInput, "ncc: sequences are empty");
  double dot = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  auto ia = std::ranges::begin(a);
  auto ib = std::ranges::begin(b);
  for (std::size_t i = 0; i < n; ++i, ++ia, ++ib) {
    const double x = static_cast<double>(*ia);
    const double y = static_cast<double>(*ib);
    dot += x * y;
    aa += x * x;
    bb += y * y;
  }
  if (aa == 0.0 && bb == 0.0) return 1.0;
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return dot / std::sqrt(aa * bb);
}

inline MetricsReport compare_images(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b, "metrics");
  MetricsReport report;
  report.mse = mse(a, b);
  report.psnr_db = psnr_from_mse(report.mse);
  report.ncc = ncc(a.pixels(), b.pixels());
  return report;
}

namespace metrics_detail {

inline std::string value_to_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace metrics_detail

/// Line-oriented report text: "mse=<v>\npsnr_db=<v>\nncc=<v>\n", values at
/// nine significant digits, infinity spelled "inf".
inline std::string format_metrics(const MetricsReport& report) {
  return "mse=" + metrics_detail::value_to_string(report.mse) +
         "\npsnr_db=" + metrics_detail::value_to_string(report.psnr_db) +
         "\nncc=" + metrics_detail::value_to_string(report.ncc) + "\n";
}

}  // namespace rmi
