#pragma once

// Set-associative cache engine shared by the SRAM, DRS and HALLS systems.
// Random replacement with a seeded xorshift64* generator; write-allocate,
// write-back.

#include <cstdint>
#include <optional>
#include <vector>

#include "halls/cache_config.hpp"
#include "halls/types.hpp"

namespace halls {

class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) : state_(seed ? seed : 0x2545F4914F6CDD1Dull) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

 private:
  std::uint64_t state_;
};

struct BlockMeta {
  std::uint64_t tag = 0;
  bool valid = false;
  bool dirty = false;
  std::uint16_t last_writer_core = 0;
  // Last write or fill. The expiration counter restarts here.
  Tick write_tick = 0;
  // Bumped on every write or fill so stale expiry entries can be recognised.
  std::uint64_t stamp = 0;
  // Perfect-refresh bookkeeping: refresh period origin and the tick up to
  // which refreshes were already counted.
  Tick refresh_origin = 0;
  Tick refresh_settled = 0;
};

enum class OutcomeKind : std::uint8_t { Hit, MissClean, MissDirtyEviction };

struct AccessOutcome {
  OutcomeKind kind = OutcomeKind::Hit;
  std::optional<Address> victim_writeback;  // set iff kind == MissDirtyEviction
  std::optional<unsigned> serviced_bank;    // flat physical bank id, filled by the banked LLC
  std::uint64_t set = 0;
  unsigned way = 0;
  std::optional<BlockMeta> evicted;  // previous valid occupant of the filled way

  bool hit() const { return kind == OutcomeKind::Hit; }
};

class SetAssocCache {
 public:
  SetAssocCache(CacheGeometry geometry, std::uint64_t seed)
      : geometry_(geometry), rng_(seed), blocks_(geometry.sets * geometry.ways) {
    if (!geometry.valid()) throw Error("invalid cache geometry");
  }

  const CacheGeometry& geometry() const { return geometry_; }

  std::uint64_t set_index(Address a) const { return (a / geometry_.line_bytes) % geometry_.sets; }
  std::uint64_t tag_of(Address a) const { return a / (geometry_.line_bytes * geometry_.sets); }
  Address block_address(std::uint64_t set, std::uint64_t tag) const {
    return (tag * geometry_.sets + set) * geometry_.line_bytes;
  }
  Address line_address(Address a) const { return a - a % geometry_.line_bytes; }

  const BlockMeta& block(std::uint64_t set, unsigned way) const {
    return blocks_[set * geometry_.ways + way];
  }
  BlockMeta& block(std::uint64_t set, unsigned way) { return blocks_[set * geometry_.ways + way]; }

  std::optional<unsigned> probe(Address a) const {
    const auto set = set_index(a);
    const auto tag = tag_of(a);
    for (unsigned w = 0; w < geometry_.ways; ++w) {
      const auto& b = block(set, w);
      if (b.valid && b.tag == tag) return w;
    }
    return std::nullopt;
  }

  AccessOutcome lookup(Address a, AccessKind kind, Tick tick, unsigned core = 0) {
    AccessOutcome out;
    out.set = set_index(a);
    const auto tag = tag_of(a);
    BlockMeta* base = &blocks_[out.set * geometry_.ways];
    for (unsigned w = 0; w < geometry_.ways; ++w) {
      if (base[w].valid && base[w].tag == tag) {
        out.kind = OutcomeKind::Hit;
        out.way = w;
        if (kind == AccessKind::Write) mark_written(base[w], tick, core);
        return out;
      }
    }

    unsigned victim = static_cast<unsigned>(geometry_.ways);
    for (unsigned w = 0; w < geometry_.ways; ++w) {
      if (!base[w].valid) {
        victim = w;
        break;
      }
    }
    if (victim == geometry_.ways) victim = static_cast<unsigned>(rng_.next() % geometry_.ways);

    BlockMeta& b = base[victim];
    out.way = victim;
    out.kind = OutcomeKind::MissClean;
    if (b.valid) {
      out.evicted = b;
      if (b.dirty) {
        out.kind = OutcomeKind::MissDirtyEviction;
        out.victim_writeback = block_address(out.set, b.tag);
      }
    }
    b = BlockMeta{};
    b.valid = true;
    b.tag = tag;
    mark_written(b, tick, core);
    b.dirty = kind == AccessKind::Write;
    b.refresh_origin = tick;
    b.refresh_settled = tick;
    return out;
  }

  void invalidate(std::uint64_t set, unsigned way) { block(set, way) = BlockMeta{}; }

  // Empties the cache and returns the addresses of dirty blocks.
  std::vector<Address> flush() {
    std::vector<Address> dirty;
    for (std::uint64_t s = 0; s < geometry_.sets; ++s) {
      for (unsigned w = 0; w < geometry_.ways; ++w) {
        auto& b = block(s, w);
        if (b.valid && b.dirty) dirty.push_back(block_address(s, b.tag));
        b = BlockMeta{};
      }
    }
    return dirty;
  }

  // Replaces the geometry; contents are discarded, the PRNG stream continues.
  void reset(CacheGeometry geometry) {
    if (!geometry.valid()) throw Error("invalid cache geometry");
    geometry_ = geometry;
    blocks_.assign(geometry.sets * geometry.ways, BlockMeta{});
  }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.valid ? 1 : 0;
    return n;
  }

  template <typename F>
  void for_each_valid(F&& f) {
    for (std::uint64_t s = 0; s < geometry_.sets; ++s) {
      for (unsigned w = 0; w < geometry_.ways; ++w) {
        auto& b = block(s, w);
        if (b.valid) f(s, w, b);
      }
    }
  }

 private:
  void mark_written(BlockMeta& b, Tick tick, unsigned core) {
    b.dirty = true;
    b.write_tick = tick;
    b.stamp = ++stamp_;
    b.last_writer_core = static_cast<std::uint16_t>(core);
  }

  CacheGeometry geometry_;
  Xorshift64Star rng_;
  std::vector<BlockMeta> blocks_;
  std::uint64_t stamp_ = 0;
};

// Bank-shutdown reconfiguration cost (worst-case context switch).
struct ReconfigCost {
  Tick latency_cycles = 0;
  double energy_nJ = 0.0;
  friend bool operator==(const ReconfigCost&, const ReconfigCost&) = default;
};

inline constexpr ReconfigCost kReconfigCost{114688, 14844.0};

struct ReconfigResult {
  ReconfigCost cost;
  std::vector<Address> writebacks;
};

// Flushes the cache into the new geometry. Identity reconfiguration is free
// and leaves the contents untouched.
inline ReconfigResult reconfigure(SetAssocCache& state, const CacheConfig& old,
                                  const CacheConfig& next) {
  if (!old.valid() || !next.valid()) throw Error("reconfigure: invalid cache config");
  if (old == next) return {};
  ReconfigResult r{kReconfigCost, state.flush()};
  state.reset(next.geometry());
  return r;
}

}  // namespace halls
