#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace halls {

using Tick = std::uint64_t;
using Address = std::uint64_t;

// Physical addresses handled by the LLC are 48 bits wide.
inline constexpr unsigned kAddressBits = 48;
inline constexpr Address kAddressLimit = Address{1} << kAddressBits;

inline constexpr unsigned kClusterCount = 4;
inline constexpr unsigned kBanksPerCluster = 8;
inline constexpr unsigned kBankCount = kClusterCount * kBanksPerCluster;
inline constexpr std::uint64_t kBankBytes = 32 * 1024;

// 4-bit expiration counter: states 0..15, one step per retention/16.
inline constexpr unsigned kCounterStates = 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AccessKind : std::uint8_t { Read, Write };

// Cluster k hosts retention class k.
enum class RetentionClass : std::uint8_t { R100us = 0, R1ms = 1, R10ms = 2, R100ms = 3 };

inline constexpr std::array<RetentionClass, 4> kRetentionClasses = {
    RetentionClass::R100us, RetentionClass::R1ms, RetentionClass::R10ms, RetentionClass::R100ms};

constexpr unsigned cluster_of(RetentionClass r) { return static_cast<unsigned>(r); }

constexpr RetentionClass retention_of_cluster(unsigned cluster) {
  return static_cast<RetentionClass>(cluster);
}

constexpr double retention_ns(RetentionClass r) {
  switch (r) {
    case RetentionClass::R100us: return 1e5;
    case RetentionClass::R1ms: return 1e6;
    case RetentionClass::R10ms: return 1e7;
    case RetentionClass::R100ms: return 1e8;
  }
  return 0.0;
}

inline Tick retention_cycles(RetentionClass r, double clock_ghz) {
  return static_cast<Tick>(std::llround(retention_ns(r) * clock_ghz));
}

inline std::string to_string(RetentionClass r) {
  switch (r) {
    case RetentionClass::R100us: return "100us";
    case RetentionClass::R1ms: return "1ms";
    case RetentionClass::R10ms: return "10ms";
    case RetentionClass::R100ms: return "100ms";
  }
  return "?";
}

inline RetentionClass parse_retention(std::string_view text) {
  for (auto r : kRetentionClasses) {
    if (text == to_string(r)) return r;
  }
  throw Error("unknown retention class '" + std::string(text) + "'");
}

// Memory technology of a bank: SRAM, or STT-RAM with a given retention.
struct Device {
  enum class Kind : std::uint8_t { Sram, Stt };
  Kind kind = Kind::Sram;
  RetentionClass retention = RetentionClass::R100us;

  static constexpr Device sram() { return Device{Kind::Sram, RetentionClass::R100us}; }
  static constexpr Device stt(RetentionClass r) { return Device{Kind::Stt, r}; }

  friend constexpr bool operator==(const Device& a, const Device& b) {
    return a.kind == b.kind && (a.kind == Kind::Sram || a.retention == b.retention);
  }
};

inline std::string to_string(const Device& d) {
  return d.kind == Device::Kind::Sram ? std::string("SRAM") : "STT-" + to_string(d.retention);
}

inline Device parse_device(std::string_view text) {
  if (text == "SRAM") return Device::sram();
  if (text.substr(0, 4) == "STT-") return Device::stt(parse_retention(text.substr(4)));
  throw Error("unknown device '" + std::string(text) + "'");
}

constexpr bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace halls
