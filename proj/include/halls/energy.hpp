#pragma once

// SRAM / STT-RAM parameter tables and conversion of access statistics into
// energy, latency and EDP.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "halls/cache_config.hpp"
#include "halls/default_params.hpp"
#include "halls/retention.hpp"
#include "halls/types.hpp"

namespace halls {

// Event counters of one bank or of the whole cache over some window.
//
// Energy and latency are charged per array operation:
//   hits   - read hits (hit energy, hit latency)
//   writes - write requests, hit or miss, plus fills after read misses
//            (write energy, write latency)
//   misses - every miss (main-memory penalty)
//   writebacks - dirty evictions, expirations and flushes (write energy)
struct AccessCounts {
  std::uint64_t read_hits = 0;
  std::uint64_t write_hits = 0;
  std::uint64_t read_misses = 0;
  std::uint64_t write_misses = 0;
  std::uint64_t writebacks = 0;
  std::uint64_t expirations = 0;
  std::uint64_t expiration_misses = 0;
  std::uint64_t refreshes = 0;
  std::uint64_t reconfigurations = 0;
  Tick reconfig_cycles = 0;

  std::uint64_t hits() const { return read_hits; }
  std::uint64_t writes() const { return write_hits + write_misses + read_misses; }
  std::uint64_t misses() const { return read_misses + write_misses; }
  std::uint64_t accesses() const { return read_hits + write_hits + read_misses + write_misses; }

  AccessCounts& operator+=(const AccessCounts& o) {
    read_hits += o.read_hits;
    write_hits += o.write_hits;
    read_misses += o.read_misses;
    write_misses += o.write_misses;
    writebacks += o.writebacks;
    expirations += o.expirations;
    expiration_misses += o.expiration_misses;
    refreshes += o.refreshes;
    reconfigurations += o.reconfigurations;
    reconfig_cycles += o.reconfig_cycles;
    return *this;
  }
  friend bool operator==(const AccessCounts&, const AccessCounts&) = default;
};

struct EnergyParams {
  double write_energy_nJ = 0.0;
  double hit_energy_nJ = 0.0;
  double leakage_mW = 0.0;  // whole structure
  unsigned hit_latency_cycles = 0;
  unsigned write_latency_cycles = 0;
};

enum class HitLatencySource : std::uint8_t {
  Printed,    // per-row values (2 cycles everywhere)
  Alternate,  // 1 cycle for the tuned-configuration rows
};

struct ParamRecord {
  Device device;
  CacheConfig config;
  EnergyParams params;
  std::optional<unsigned> hit_cycles_alt;
  std::string source;
};

class MissingParams : public Error {
 public:
  MissingParams(const Device& d, const CacheConfig& c)
      : Error("no parameters for (" + to_string(d) + ", " + to_string(c) + ")"), device(d),
        config(c) {}
  Device device;
  CacheConfig config;
};

class ParamTable {
 public:
  // One record per line: whitespace separated key=value pairs. Required keys:
  // device size ways line write_nJ hit_nJ leakage_mW hit_cycles write_cycles.
  static ParamTable parse(std::string_view text) {
    ParamTable t;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        t.add(parse_record(line));
      } catch (const Error& e) {
        throw Error("params line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return t;
  }

  static ParamTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open parameter file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  static const ParamTable& shipped() {
    static const ParamTable t = parse(kDefaultParamsText);
    return t;
  }

  void add(ParamRecord r) {
    if (!(r.params.write_energy_nJ >= 0 && r.params.hit_energy_nJ >= 0 &&
          r.params.leakage_mW >= 0)) {
      throw Error("negative parameter");
    }
    auto key = make_key(r.device, r.config);
    if (records_.count(key)) {
      throw Error("duplicate record for (" + to_string(r.device) + ", " + to_string(r.config) + ")");
    }
    records_.emplace(key, std::move(r));
  }

  bool contains(const Device& d, const CacheConfig& c) const {
    return records_.count(make_key(d, c)) != 0;
  }

  const ParamRecord& record(const Device& d, const CacheConfig& c) const {
    auto it = records_.find(make_key(d, c));
    if (it == records_.end()) throw MissingParams(d, c);
    return it->second;
  }

  EnergyParams lookup(const Device& d, const CacheConfig& c,
                      HitLatencySource hit = HitLatencySource::Printed) const {
    const auto& r = record(d, c);
    EnergyParams p = r.params;
    if (hit == HitLatencySource::Alternate && r.hit_cycles_alt) p.hit_latency_cycles = *r.hit_cycles_alt;
    return p;
  }

  std::vector<ParamRecord> records() const {
    std::vector<ParamRecord> out;
    for (const auto& [k, r] : records_) out.push_back(r);
    return out;
  }

  std::size_t size() const { return records_.size(); }

 private:
  using Key = std::tuple<int, int, std::uint64_t, std::uint64_t, std::uint64_t>;

  static Key make_key(const Device& d, const CacheConfig& c) {
    const int kind = d.kind == Device::Kind::Sram ? 0 : 1;
    const int ret = d.kind == Device::Kind::Sram ? 0 : static_cast<int>(d.retention);
    return {kind, ret, c.size_bytes, c.ways, c.line_bytes};
  }

  static ParamRecord parse_record(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw Error("expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto get = [&](const char* key) -> const std::string& {
      auto it = kv.find(key);
      if (it == kv.end()) throw Error(std::string("missing key '") + key + "'");
      return it->second;
    };
    auto number = [&](const char* key) {
      const auto& s = get(key);
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size()) throw Error(std::string("bad number for '") + key + "'");
      return v;
    };
    auto cycles = [&](const char* key) {
      const double v = number(key);
      if (v < 0 || v != std::floor(v)) throw Error(std::string("bad cycle count for '") + key + "'");
      return static_cast<unsigned>(v);
    };

    ParamRecord r;
    r.device = parse_device(get("device"));
    r.config = CacheConfig{parse_size(get("size")), parse_size(get("line")), parse_size(get("ways"))};
    if (!r.config.valid()) throw Error("config outside the design space");
    r.params.write_energy_nJ = number("write_nJ");
    r.params.hit_energy_nJ = number("hit_nJ");
    r.params.leakage_mW = number("leakage_mW");
    r.params.hit_latency_cycles = cycles("hit_cycles");
    r.params.write_latency_cycles = cycles("write_cycles");
    if (kv.count("hit_cycles_alt")) r.hit_cycles_alt = cycles("hit_cycles_alt");
    r.source = kv.count("source") ? kv["source"] : "user";
    return r;
  }

  std::map<Key, ParamRecord> records_;
};

// Energy components in nJ.
struct EnergyLedger {
  double dynamic_nJ = 0.0;
  double leakage_nJ = 0.0;
  double refresh_nJ = 0.0;
  double buffer_leakage_nJ = 0.0;
  double reconfig_nJ = 0.0;

  double total() const {
    return dynamic_nJ + leakage_nJ + refresh_nJ + buffer_leakage_nJ + reconfig_nJ;
  }

  EnergyLedger& operator+=(const EnergyLedger& o) {
    dynamic_nJ += o.dynamic_nJ;
    leakage_nJ += o.leakage_nJ;
    refresh_nJ += o.refresh_nJ;
    buffer_leakage_nJ += o.buffer_leakage_nJ;
    reconfig_nJ += o.reconfig_nJ;
    return *this;
  }
};

// Dynamic, leakage and refresh energy of a window. Leakage uses
// params.leakage_mW as given, so callers pass a per-bank share when
// accounting bank by bank. Buffer leakage and reconfiguration energy are
// added by the caller.
inline EnergyLedger energy_of_interval(const AccessCounts& stats, const EnergyParams& params,
                                       Tick wall_cycles, double clock_ghz,
                                       double per_refresh_energy_nJ = 0.0) {
  EnergyLedger l;
  l.dynamic_nJ = static_cast<double>(stats.hits()) * params.hit_energy_nJ +
                 static_cast<double>(stats.writes() + stats.writebacks) * params.write_energy_nJ;
  l.leakage_nJ = leakage_energy_nJ(params.leakage_mW, wall_cycles, clock_ghz);
  l.refresh_nJ = static_cast<double>(stats.refreshes) * per_refresh_energy_nJ;
  return l;
}

inline EnergyParams bank_share(EnergyParams p, std::uint64_t bank_count) {
  p.leakage_mW /= static_cast<double>(bank_count);
  return p;
}

// Energy-delay product in nJ x cycles.
inline double edp(double energy_nJ, double latency_cycles) { return energy_nJ * latency_cycles; }

// Access latency of a window: array time plus miss penalties plus any
// reconfiguration stall.
inline double interval_latency(const AccessCounts& stats, const EnergyParams& params,
                               unsigned miss_penalty_cycles) {
  return static_cast<double>(stats.hits()) * params.hit_latency_cycles +
         static_cast<double>(stats.writes()) * params.write_latency_cycles +
         static_cast<double>(stats.misses()) * miss_penalty_cycles +
         static_cast<double>(stats.reconfig_cycles);
}

}  // namespace halls
