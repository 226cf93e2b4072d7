#pragma once

// Physical organisation of the adaptable LLC: 32 banks of 32KB in four
// 8-bank retention clusters, the CPU-visible virtual bank layout of a
// configuration, and the virtual-to-physical mapping table.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "halls/cache_config.hpp"
#include "halls/types.hpp"

namespace halls {

struct PhysicalBankId {
  std::uint8_t cluster = 0;  // 0..3, selects the retention class
  std::uint8_t bank = 0;     // 0..7 within the cluster

  unsigned flat() const { return cluster * kBanksPerCluster + bank; }
  RetentionClass retention() const { return retention_of_cluster(cluster); }
  static PhysicalBankId from_flat(unsigned id) {
    return {static_cast<std::uint8_t>(id / kBanksPerCluster),
            static_cast<std::uint8_t>(id % kBanksPerCluster)};
  }
  friend bool operator==(const PhysicalBankId&, const PhysicalBankId&) = default;
};

// A 32KB chunk of the logical cache: a contiguous way range crossed with a
// contiguous set range.
struct VirtualBank {
  unsigned id = 0;
  unsigned first_way = 0;
  unsigned way_count = 1;
  std::uint64_t first_set = 0;
  std::uint64_t set_count = 0;
  // Observed EDP with this vbank hosted in each cluster (retention tuning).
  std::array<std::optional<double>, kClusterCount> edp_by_cluster{};

  bool contains(std::uint64_t set, unsigned way) const {
    return set >= first_set && set < first_set + set_count && way >= first_way &&
           way < first_way + way_count;
  }
};

using VirtualBankLayout = std::vector<VirtualBank>;

// Enumerates vbanks set-range-major: for each set range (ascending), one
// vbank per way group (ascending). A way larger than 32KB is split into set
// ranges; ways smaller than 32KB are packed whole into one vbank.
inline VirtualBankLayout build_layout(const CacheConfig& config) {
  if (!config.valid()) throw Error("build_layout: invalid config " + to_string(config));
  const std::uint64_t way_bytes = config.sets() * config.line_bytes;
  VirtualBankLayout layout;
  if (way_bytes >= kBankBytes) {
    const std::uint64_t sets_per_vbank = kBankBytes / config.line_bytes;
    const std::uint64_t ranges = config.sets() / sets_per_vbank;
    for (std::uint64_t r = 0; r < ranges; ++r) {
      for (unsigned w = 0; w < config.ways; ++w) {
        VirtualBank v;
        v.id = static_cast<unsigned>(layout.size());
        v.first_way = w;
        v.way_count = 1;
        v.first_set = r * sets_per_vbank;
        v.set_count = sets_per_vbank;
        layout.push_back(v);
      }
    }
  } else {
    const auto ways_per_vbank = static_cast<unsigned>(kBankBytes / way_bytes);
    for (unsigned w = 0; w < config.ways; w += ways_per_vbank) {
      VirtualBank v;
      v.id = static_cast<unsigned>(layout.size());
      v.first_way = w;
      v.way_count = ways_per_vbank;
      v.first_set = 0;
      v.set_count = config.sets();
      layout.push_back(v);
    }
  }
  return layout;
}

// vbank id -> physical bank.
class MappingTable {
 public:
  MappingTable() = default;
  explicit MappingTable(std::vector<PhysicalBankId> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const PhysicalBankId& operator[](std::size_t vbank) const { return entries_.at(vbank); }
  const std::vector<PhysicalBankId>& entries() const { return entries_; }
  void push(PhysicalBankId b) { entries_.push_back(b); }

  // Empty string when legal: injective, <=8 vbanks per cluster, covers the
  // layout exactly.
  std::string check(const VirtualBankLayout& layout) const {
    if (entries_.size() != layout.size()) {
      return "mapping has " + std::to_string(entries_.size()) + " entries for " +
             std::to_string(layout.size()) + " vbanks";
    }
    std::bitset<kBankCount> used;
    for (std::size_t v = 0; v < entries_.size(); ++v) {
      const auto& b = entries_[v];
      if (b.cluster >= kClusterCount || b.bank >= kBanksPerCluster) {
        return "vbank " + std::to_string(v) + " maps outside the bank array";
      }
      if (used.test(b.flat())) {
        return "physical bank " + std::to_string(b.flat()) + " mapped twice";
      }
      used.set(b.flat());
    }
    return {};
  }

  void validate(const VirtualBankLayout& layout) const {
    if (auto why = check(layout); !why.empty()) throw Error("illegal mapping: " + why);
  }

  friend bool operator==(const MappingTable&, const MappingTable&) = default;

 private:
  std::vector<PhysicalBankId> entries_;
};

// Tuning set `set_id` places vbank i in cluster (i + set_id) mod 4, taking
// banks in allocation order within each cluster.
inline MappingTable tuning_set_mapping(std::size_t vbank_count, unsigned set_id) {
  std::array<std::uint8_t, kClusterCount> next{};
  MappingTable m;
  for (std::size_t i = 0; i < vbank_count; ++i) {
    const auto c = static_cast<std::uint8_t>((i + set_id) % kClusterCount);
    if (next[c] >= kBanksPerCluster) throw Error("tuning set overflows a cluster");
    m.push({c, next[c]++});
  }
  return m;
}

// Fills clusters in order; used by uniform-technology systems.
inline MappingTable sequential_mapping(std::size_t vbank_count) {
  MappingTable m;
  for (std::size_t i = 0; i < vbank_count; ++i) {
    m.push(PhysicalBankId::from_flat(static_cast<unsigned>(i)));
  }
  return m;
}

struct BankDispatch {
  unsigned vbank = 0;
  PhysicalBankId physical;
  unsigned bank_local_id = 0;  // rank of the vbank among those sharing the cluster
  unsigned first_way = 0;
  unsigned way_count = 1;
};

struct DecodedAddress {
  std::uint64_t index = 0;
  std::uint64_t tag = 0;
  std::uint64_t offset = 0;
  std::vector<BankDispatch> dispatch;  // every bank holding a way of the set
};

inline unsigned bank_local_id(const MappingTable& mapping, unsigned vbank) {
  const auto& me = mapping[vbank];
  unsigned rank = 0;
  for (const auto& b : mapping.entries()) {
    if (b.cluster == me.cluster && b.bank < me.bank) ++rank;
  }
  return rank;
}

inline DecodedAddress decode(const CacheConfig& config, const VirtualBankLayout& layout,
                             const MappingTable& mapping, Address address) {
  if (address >= kAddressLimit) throw Error("decode: address outside the modeled range");
  if (mapping.size() != layout.size()) throw Error("decode: mapping does not cover the layout");
  DecodedAddress d;
  d.offset = address % config.line_bytes;
  d.index = (address / config.line_bytes) % config.sets();
  d.tag = address / (config.line_bytes * config.sets());
  for (const auto& v : layout) {
    if (d.index >= v.first_set && d.index < v.first_set + v.set_count) {
      d.dispatch.push_back(
          {v.id, mapping[v.id], bank_local_id(mapping, v.id), v.first_way, v.way_count});
    }
  }
  return d;
}

inline Address encode(const CacheConfig& config, std::uint64_t tag, std::uint64_t index,
                      std::uint64_t offset) {
  return (tag * config.sets() + index) * config.line_bytes + offset;
}

// Banks left powered: exactly those hosting a vbank.
inline std::bitset<kBankCount> power_state(const CacheConfig& config, const MappingTable& mapping) {
  if (mapping.size() != config.bank_count()) {
    throw Error("power_state: mapping does not match " + to_string(config));
  }
  std::bitset<kBankCount> on;
  for (const auto& b : mapping.entries()) on.set(b.flat());
  return on;
}

// vbank of every (set, way) slot, row-major by set.
inline std::vector<std::uint8_t> slot_vbanks(const CacheConfig& config,
                                             const VirtualBankLayout& layout) {
  std::vector<std::uint8_t> out(config.sets() * config.ways);
  for (const auto& v : layout) {
    for (std::uint64_t s = v.first_set; s < v.first_set + v.set_count; ++s) {
      for (unsigned w = v.first_way; w < v.first_way + v.way_count; ++w) {
        out[s * config.ways + w] = static_cast<std::uint8_t>(v.id);
      }
    }
  }
  return out;
}

inline void write_mapping_csv_header(std::ostream& os, const std::string& prefix_columns = {}) {
  os << prefix_columns << "vbank_id,way_range,set_range,cluster_id,bank_index\n";
}

inline void write_mapping_csv_rows(std::ostream& os, const VirtualBankLayout& layout,
                                   const MappingTable& mapping,
                                   const std::string& prefix_values = {}) {
  for (const auto& v : layout) {
    const auto& b = mapping[v.id];
    os << prefix_values << v.id << ',' << v.first_way << '-' << (v.first_way + v.way_count - 1)
       << ',' << v.first_set << '-' << (v.first_set + v.set_count - 1) << ','
       << unsigned{b.cluster} << ',' << unsigned{b.bank} << '\n';
  }
}

}  // namespace halls
