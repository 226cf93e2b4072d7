#pragma once

// STT-RAM volatility: per-block expiration counters and the idealised
// ("perfect") refresh scheme used by the DRS baseline.
//
// Counters tick on a global per-class clock whose period is retention/16,
// with phase origin at tick 0. A block written at tick t is evicted at the
// 16th period boundary after t, so its residency lies in (15r/16, r].

#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "halls/cache.hpp"
#include "halls/types.hpp"

namespace halls {

inline Tick counter_period(Tick retention) { return retention / kCounterStates; }

inline Tick expiry_tick(Tick write_tick, Tick period) {
  return (write_tick / period + kCounterStates) * period;
}

// Counter value at `now` for a block written at `write_tick` (saturating).
inline unsigned counter_state(Tick write_tick, Tick now, Tick period) {
  const Tick steps = now / period - write_tick / period;
  return steps >= kCounterStates - 1 ? kCounterStates - 1 : static_cast<unsigned>(steps);
}

struct Expiration {
  Address address = 0;
  bool was_dirty = false;
  std::uint64_t set = 0;
  unsigned way = 0;
  Tick tick = 0;
};

// Pending expirations, one FIFO per retention class. Writes arrive in tick
// order and expiry is monotone in write time, so each FIFO stays sorted.
class ExpirationTracker {
 public:
  explicit ExpirationTracker(double clock_ghz = 2.0) {
    for (auto r : kRetentionClasses) {
      period_[cluster_of(r)] = counter_period(retention_cycles(r, clock_ghz));
    }
  }

  Tick period(RetentionClass r) const { return period_[cluster_of(r)]; }

  void clear() {
    for (auto& q : queues_) q.clear();
  }

  void on_write(const BlockMeta& b, std::uint64_t set, unsigned way, RetentionClass r) {
    const auto c = cluster_of(r);
    queues_[c].push_back({expiry_tick(b.write_tick, period_[c]), set, way, b.stamp});
  }

  // Invalidates every block whose counter runs out in the window and reports
  // it, in expiry order.
  std::vector<Expiration> advance_time(SetAssocCache& cache, Tick from, Tick to) {
    std::vector<Expiration> out;
    advance_time(cache, from, to, [&](const Expiration& e) { out.push_back(e); });
    return out;
  }

  template <typename OnExpire>
  void advance_time(SetAssocCache& cache, Tick from, Tick to, OnExpire&& on_expire) {
    if (to < from) throw Error("advance_time: window runs backwards");
    for (;;) {
      std::size_t best = queues_.size();
      for (std::size_t c = 0; c < queues_.size(); ++c) {
        if (!queues_[c].empty() && queues_[c].front().expiry <= to &&
            (best == queues_.size() || queues_[c].front().expiry < queues_[best].front().expiry)) {
          best = c;
        }
      }
      if (best == queues_.size()) return;
      const Pending p = queues_[best].front();
      queues_[best].pop_front();
      auto& b = cache.block(p.set, p.way);
      if (!b.valid || b.stamp != p.stamp) continue;  // rewritten or evicted since
      Expiration e{cache.block_address(p.set, b.tag), b.dirty, p.set, p.way, p.expiry};
      cache.invalidate(p.set, p.way);
      on_expire(e);
    }
  }

  std::size_t pending() const {
    std::size_t n = 0;
    for (const auto& q : queues_) n += q.size();
    return n;
  }

 private:
  struct Pending {
    Tick expiry;
    std::uint64_t set;
    unsigned way;
    std::uint64_t stamp;
  };

  std::array<Tick, kClusterCount> period_{};
  std::array<std::deque<Pending>, kClusterCount> queues_;
};

struct RefreshModel {
  enum class Mode : std::uint8_t { None, PerfectDRS };
  Mode mode = Mode::None;
  // Cache read + buffer write + buffer read + cache write, 1MB at 100ms.
  double per_refresh_energy_nJ = 1.311;
  // Refresh buffer leakage for a 1MB cache (128KB direct-mapped, 16B lines).
  double buffer_leakage_mW = 141.425;

  void validate() const {
    if (mode == Mode::PerfectDRS && !(per_refresh_energy_nJ > 0.0)) {
      throw Error("perfect refresh requires a positive per-refresh energy");
    }
    if (!(buffer_leakage_mW >= 0.0)) throw Error("buffer leakage must be non-negative");
  }
};

// mW over a number of cycles, in nJ.
inline double leakage_energy_nJ(double milliwatts, Tick cycles, double clock_ghz) {
  return milliwatts * (static_cast<double>(cycles) / clock_ghz) * 1e-3;
}

// Counts the refreshes of `b` that complete in (b.refresh_settled, until] and
// advances the settled mark. A perfect refresh fires once per full retention
// period since the last write or refresh.
inline std::uint64_t settle_refreshes(BlockMeta& b, Tick until, Tick retention) {
  if (!b.valid || until <= b.refresh_settled) return 0;
  const Tick done = (until - b.refresh_origin) / retention;
  const Tick before = (b.refresh_settled - b.refresh_origin) / retention;
  b.refresh_settled = until;
  return done - before;
}

// Restarts the refresh period at a write.
inline std::uint64_t refresh_on_write(BlockMeta& b, Tick tick, Tick retention) {
  const auto n = settle_refreshes(b, tick, retention);
  b.refresh_origin = tick;
  b.refresh_settled = tick;
  return n;
}

struct RefreshTally {
  std::uint64_t refresh_count = 0;
  double refresh_energy_nJ = 0.0;
  double buffer_leakage_nJ = 0.0;
};

// Settles every resident block to `to` under a uniform retention.
inline RefreshTally refresh_accounting(SetAssocCache& cache, Tick from, Tick to, Tick retention,
                                       const RefreshModel& model, double clock_ghz = 2.0) {
  if (to < from) throw Error("refresh_accounting: window runs backwards");
  if (model.mode != RefreshModel::Mode::PerfectDRS) {
    throw Error("refresh_accounting requires the perfect refresh model");
  }
  model.validate();
  RefreshTally t;
  cache.for_each_valid([&](std::uint64_t, unsigned, BlockMeta& b) {
    t.refresh_count += settle_refreshes(b, to, retention);
  });
  t.refresh_energy_nJ = static_cast<double>(t.refresh_count) * model.per_refresh_energy_nJ;
  t.buffer_leakage_nJ = leakage_energy_nJ(model.buffer_leakage_mW, to - from, clock_ghz);
  return t;
}

}  // namespace halls
