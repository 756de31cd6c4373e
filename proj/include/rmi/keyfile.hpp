#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmi/error.hpp"
#include "rmi/key.hpp"

namespace rmi {

// RMIK1 key file, LF line endings:
//   line 1: "RMIK1"
//   line 2: "<width> <height>"
//   line 3: "seed" | "explicit"
//   seed mode:     line 4 holds the decimal 64-bit seed
//   explicit mode: <height> lines, each <width> space-separated entries

inline std::string serialize_key(const RmiKey& key) {
  std::string out = "RMIK1\n";
  out += std::to_string(key.width()) + " " + std::to_string(key.height()) + "\n";
  if (key.seed().has_value()) {
    out += "seed\n";
    out += std::to_string(*key.seed()) + "\n";
  } else {
    out += "explicit\n";
    for (int y = 0; y < key.height(); ++y) {
      for (int x = 0; x < key.width(); ++x) {
        if (x > 0) out += ' ';
        out += std::to_string(key.at(x, y));
      }
      out += '\n';
    }
  }
  return out;
}

namespace keyfile_detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // CRLF input is normalized by dropping one trailing '\r' per line.
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  // A final newline leaves one empty trailing element; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline bool parse_u64(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  std::uint64_t value = 0;
  for (const char c : token) {
    if (c < '0' || c > '9') return false;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (0xFFFFFFFFFFFFFFFFULL - digit) / 10) return false;  // overflow
    value = value * 10 + digit;
  }
  out = value;
  return true;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

}  // namespace keyfile_detail

/// Strict parser for the RMIK1 format. Seed-mode files regenerate their
/// entries through generate_key, so equal files always yield equal keys.
inline RmiKey parse_key(std::string_view text) {
  using namespace keyfile_detail;
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "RMIK1") {
    fail(ErrorKind::BadMagic, "key file does not start with RMIK1");
  }
  if (lines.size() < 2) {
    fail(ErrorKind::MalformedDimensions, "key file is missing the size line");
  }
  const auto dims = split_fields(lines[1]);
  std::uint64_t width = 0;
  std::uint64_t height = 0;
  if (dims.size() != 2 || !parse_u64(dims[0], width) ||
      !parse_u64(dims[1], height) || width < 1 || height < 1 ||
      width > 0x7FFFFFFFULL || height > 0x7FFFFFFFULL) {
    fail(ErrorKind::MalformedDimensions,
         "key file size line must hold two positive integers");
  }
  if (lines.size() < 3) {
    fail(ErrorKind::UnknownMode, "key file is missing the mode line");
  }
  const std::string_view mode = lines[2];

  if (mode == "seed") {
    if (lines.size() < 4) {
      fail(ErrorKind::MalformedSeed, "seed-mode key file is missing the seed");
    }
    if (lines.size() > 4) {
      fail(ErrorKind::TrailingData, "seed-mode key file has extra lines");
    }
    std::uint64_t seed = 0;
    if (!parse_u64(lines[3], seed)) {
      fail(ErrorKind::MalformedSeed,
           "seed must be a decimal unsigned 64-bit integer");
    }
    return generate_key(static_cast<int>(width), static_cast<int>(height),
                        seed);
  }
  if (mode == "explicit") {
    const std::size_t expected_lines = 3 + static_cast<std::size_t>(height);
    if (lines.size() < expected_lines) {
      fail(ErrorKind::WrongEntryCount,
           "explicit key file holds " + std::to_string(lines.size() - 3) +
               " entry rows, expected " + std::to_string(height));
    }
    if (lines.size() > expected_lines) {
      fail(ErrorKind::TrailingData, "explicit key file has extra lines");
    }
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(width) *
                    static_cast<std::size_t>(height));
    for (std::size_t row = 0; row < height; ++row) {
      const auto fields = split_fields(lines[3 + row]);
      if (fields.size() != width) {
        fail(ErrorKind::WrongEntryCount,
             "key row " + std::to_string(row) + " holds " +
                 std::to_string(fields.size()) + " entries, expected " +
                 std::to_string(width));
      }
      for (const auto field : fields) {
        std::uint64_t value = 0;
        if (!parse_u64(field, value)) {
          fail(ErrorKind::MalformedEntry,
               "key entry \"" + std::string(field) +
                   "\" is not a decimal integer");
        }
        if (value > static_cast<std::uint64_t>(kKeyEntryMax)) {
          fail(ErrorKind::EntryOutOfRange,
               "key entry " + std::to_string(value) + " is outside [0," +
                   std::to_string(kKeyEntryMax) + "]");
        }
        entries.push_back(static_cast<int>(value));
      }
    }
    return key_from_matrix(entries, static_cast<int>(width),
                           static_cast<int>(height));
  }
  fail(ErrorKind::UnknownMode,
       "key file mode \"" + std::string(mode) + "\" is not seed or explicit");
}

}  // namespace rmi
