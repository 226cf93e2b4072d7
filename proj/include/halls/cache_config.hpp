#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halls/types.hpp"

namespace halls {

// Set-associative geometry. Not restricted to the LLC design space, so the
// engine can also be exercised with small test caches.
struct CacheGeometry {
  std::uint64_t line_bytes = 64;
  std::uint64_t sets = 1;
  std::uint64_t ways = 1;

  std::uint64_t size_bytes() const { return line_bytes * sets * ways; }
  bool valid() const {
    return is_power_of_two(line_bytes) && is_power_of_two(sets) && ways >= 1;
  }
  friend bool operator==(const CacheGeometry&, const CacheGeometry&) = default;
};

// A point in the LLC design space: 128KB..1MB, 16..64B lines, 1..16 ways.
struct CacheConfig {
  std::uint64_t size_bytes = 1024 * 1024;
  std::uint64_t line_bytes = 64;
  std::uint64_t ways = 16;

  static constexpr std::uint64_t kMinSize = 128 * 1024, kMaxSize = 1024 * 1024;
  static constexpr std::uint64_t kMinLine = 16, kMaxLine = 64;
  static constexpr std::uint64_t kMinWays = 1, kMaxWays = 16;

  static constexpr CacheConfig maximum() { return {kMaxSize, kMaxLine, kMaxWays}; }

  std::uint64_t sets() const { return size_bytes / (line_bytes * ways); }
  std::uint64_t bank_count() const { return size_bytes / kBankBytes; }
  CacheGeometry geometry() const { return {line_bytes, sets(), ways}; }

  bool valid() const {
    auto in = [](std::uint64_t v, std::uint64_t lo, std::uint64_t hi) {
      return is_power_of_two(v) && v >= lo && v <= hi;
    };
    return in(size_bytes, kMinSize, kMaxSize) && in(line_bytes, kMinLine, kMaxLine) &&
           in(ways, kMinWays, kMaxWays) && size_bytes % (line_bytes * ways) == 0 &&
           is_power_of_two(sets());
  }

  friend bool operator==(const CacheConfig&, const CacheConfig&) = default;
};

// "128K-2W-64B" / "1M-16W-64B"
inline std::string to_string(const CacheConfig& c) {
  const auto kb = c.size_bytes / 1024;
  const std::string size = kb >= 1024 ? std::to_string(kb / 1024) + "M" : std::to_string(kb) + "K";
  return size + "-" + std::to_string(c.ways) + "W-" + std::to_string(c.line_bytes) + "B";
}

inline std::uint64_t parse_size(std::string_view text) {
  if (text.empty()) throw Error("empty size");
  std::uint64_t mult = 1;
  const char suffix = text.back();
  if (suffix == 'K' || suffix == 'k') mult = 1024;
  if (suffix == 'M' || suffix == 'm') mult = 1024 * 1024;
  if (mult != 1) text.remove_suffix(1);
  std::uint64_t v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw Error("bad size '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v * mult;
}

inline CacheConfig parse_config(std::string_view text) {
  const auto d1 = text.find('-');
  const auto d2 = text.find('-', d1 == std::string_view::npos ? d1 : d1 + 1);
  if (d1 == std::string_view::npos || d2 == std::string_view::npos) {
    throw Error("bad cache config '" + std::string(text) + "' (expected e.g. 128K-2W-64B)");
  }
  auto ways = text.substr(d1 + 1, d2 - d1 - 1);
  auto line = text.substr(d2 + 1);
  if (ways.empty() || ways.back() != 'W' || line.empty() || line.back() != 'B') {
    throw Error("bad cache config '" + std::string(text) + "' (expected e.g. 128K-2W-64B)");
  }
  CacheConfig c{parse_size(text.substr(0, d1)), parse_size(line.substr(0, line.size() - 1)),
                parse_size(ways.substr(0, ways.size() - 1))};
  if (!c.valid()) throw Error("cache config '" + std::string(text) + "' outside the design space");
  return c;
}

// Candidate values of each tunable parameter, largest first.
struct DesignSpace {
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> lines;
  std::vector<std::uint64_t> ways;

  static DesignSpace standard() {
    return {{1024 * 1024, 512 * 1024, 256 * 1024, 128 * 1024}, {64, 32, 16}, {16, 8, 4, 2, 1}};
  }

  std::vector<CacheConfig> lattice() const {
    std::vector<CacheConfig> out;
    for (auto s : sizes) {
      for (auto l : lines) {
        for (auto w : ways) {
          CacheConfig c{s, l, w};
          if (c.valid()) out.push_back(c);
        }
      }
    }
    return out;
  }
};

}  // namespace halls
