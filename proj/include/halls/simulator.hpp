#pragma once

// Trace-driven model of the banked LLC: the set-associative engine plus
// bank attribution, retention behaviour and per-bank energy accounting.

#include <array>
#include <bitset>
#include <functional>
#include <unordered_map>
#include <vector>

#include "halls/banked_llc.hpp"
#include "halls/cache.hpp"
#include "halls/energy.hpp"
#include "halls/retention.hpp"
#include "halls/trace.hpp"

namespace halls {

enum class Volatility : std::uint8_t {
  NonVolatile,     // SRAM
  Expiring,        // relaxed STT-RAM, blocks evicted when the counter runs out
  PerfectRefresh,  // relaxed STT-RAM kept alive by ideal refreshes
};

// Memory technology of the four clusters.
struct Technology {
  Volatility volatility = Volatility::NonVolatile;
  std::array<Device, kClusterCount> cluster_device{};
  // Retention charged by the refresh model under PerfectRefresh.
  RetentionClass refresh_retention = RetentionClass::R10ms;

  static Technology halls() {
    Technology t;
    t.volatility = Volatility::Expiring;
    for (auto r : kRetentionClasses) t.cluster_device[cluster_of(r)] = Device::stt(r);
    return t;
  }
  static Technology sram() {
    Technology t;
    t.cluster_device.fill(Device::sram());
    return t;
  }
  static Technology drs(RetentionClass r) {
    Technology t;
    t.volatility = Volatility::PerfectRefresh;
    t.cluster_device.fill(Device::stt(r));
    t.refresh_retention = r;
    return t;
  }
};

struct SimOptions {
  double clock_ghz = 2.0;
  unsigned miss_penalty_cycles = 100;
  std::uint64_t seed = 1;
  HitLatencySource hit_latency = HitLatencySource::Printed;
  RefreshModel refresh{RefreshModel::Mode::PerfectDRS};
  // Remapping vbanks moves data between banks: flush and charge it like a
  // reconfiguration.
  bool charge_remap = true;
};

struct IntervalReport {
  Tick start_tick = 0;
  Tick end_tick = 0;
  CacheConfig config;
  MappingTable mapping;
  std::bitset<kBankCount> powered;
  AccessCounts total;  // includes reconfiguration counters
  std::array<AccessCounts, kBankCount> bank_counts{};
  std::array<EnergyLedger, kBankCount> bank_ledger{};
  EnergyLedger ledger;               // banks + buffer leakage + reconfiguration
  double crosscheck_total_nJ = 0.0;  // same energy, grouped by device instead of bank
  double access_latency_cycles = 0.0;
  double latency_cycles = 0.0;  // access latency + reconfiguration stall

  Tick wall_cycles() const { return end_tick - start_tick; }
};

struct AccessEvent {
  const MemoryAccess& access;
  const AccessOutcome& outcome;
  unsigned bank;
  Tick retention_cycles;  // 0 when the bank does not expire blocks
};

class LlcSimulator {
 public:
  LlcSimulator(const ParamTable& params, Technology tech, SimOptions opts, const CacheConfig& config,
               const MappingTable& mapping, Tick start_tick = 0)
      : params_(params),
        tech_(tech),
        opts_(opts),
        cache_(config.geometry(), opts.seed),
        tracker_(opts.clock_ghz),
        now_(start_tick),
        interval_start_(start_tick),
        segment_start_(start_tick) {
    opts_.refresh.validate();
    install(config, mapping);
  }

  const CacheConfig& config() const { return config_; }
  const VirtualBankLayout& layout() const { return layout_; }
  const MappingTable& mapping() const { return mapping_; }
  const SetAssocCache& cache() const { return cache_; }
  const Technology& technology() const { return tech_; }
  const SimOptions& options() const { return opts_; }
  Tick now() const { return now_; }
  const EnergyParams& bank_params(unsigned bank) const { return bank_params_[bank]; }
  std::bitset<kBankCount> powered() const { return powered_; }

  unsigned bank_of(std::uint64_t set, unsigned way) const {
    return slot_bank_[set * config_.ways + way];
  }

  Tick retention_of_bank(unsigned bank) const {
    if (tech_.volatility != Volatility::Expiring) return 0;
    return retention_cycles(PhysicalBankId::from_flat(bank).retention(), opts_.clock_ghz);
  }

  void set_observer(std::function<void(const AccessEvent&)> f) { observer_ = std::move(f); }

  // Switches configuration and/or mapping at `now`. Any change flushes the
  // cache; a configuration change always costs a reconfiguration, a pure
  // remap only when opts.charge_remap is set.
  void configure(const CacheConfig& config, const MappingTable& mapping, Tick now) {
    if (now < now_) throw Error("configure: time runs backwards");
    if (config == config_ && mapping == mapping_) return;
    advance_to(now);
    if (tech_.volatility == Volatility::PerfectRefresh) settle_all_refreshes(now);

    // Flush writebacks belong to the outgoing layout and its parameters.
    cache_.for_each_valid([&](std::uint64_t s, unsigned w, BlockMeta& b) {
      if (b.dirty) ++segment_counts_[bank_of(s, w)].writebacks;
    });
    close_segment(now);
    const bool config_changed = !(config == config_);
    const auto old = config_;
    if (config_changed) {
      reconfigure(cache_, old, config);
    } else {
      cache_.flush();
    }
    if (config_changed || opts_.charge_remap) {
      ++interval_global_.reconfigurations;
      interval_global_.reconfig_cycles += kReconfigCost.latency_cycles;
      interval_reconfig_nJ_ += kReconfigCost.energy_nJ;
    }
    tracker_.clear();
    expired_lines_.clear();
    install(config, mapping);
  }

  void access(const MemoryAccess& a) {
    if (a.tick < now_) throw Error("access: tick regression");
    advance_to(a.tick);
    const AccessOutcome out = cache_.lookup(a.address, a.kind, a.tick, a.core_id);
    const unsigned bank = bank_of(out.set, out.way);
    auto& c = segment_counts_[bank];
    BlockMeta& b = cache_.block(out.set, out.way);

    if (out.hit()) {
      if (a.kind == AccessKind::Read) {
        ++c.read_hits;
      } else {
        ++c.write_hits;
        on_block_written(b, out.set, out.way, bank, /*refill=*/false);
      }
    } else {
      if (out.evicted && tech_.volatility == Volatility::PerfectRefresh) {
        BlockMeta victim = *out.evicted;
        c.refreshes += settle_refreshes(victim, a.tick, refresh_retention_);
      }
      if (out.victim_writeback) ++c.writebacks;
      unsigned charged = bank;
      if (!expired_lines_.empty()) {
        auto it = expired_lines_.find(cache_.line_address(a.address));
        if (it != expired_lines_.end()) {
          charged = it->second;
          ++segment_counts_[charged].expiration_misses;
          expired_lines_.erase(it);
        }
      }
      auto& mc = segment_counts_[charged];
      if (a.kind == AccessKind::Read) {
        ++mc.read_misses;
      } else {
        ++mc.write_misses;
      }
      on_block_written(b, out.set, out.way, bank, /*refill=*/true);
    }
    if (observer_) {
      AccessOutcome o = out;
      o.serviced_bank = bank;
      observer_(AccessEvent{a, o, bank, retention_of_bank(bank)});
    }
  }

  // Processes expirations due up to and including `to`.
  std::vector<Expiration> advance_time(Tick to) {
    std::vector<Expiration> out;
    advance_to(to, [&](const Expiration& e) { out.push_back(e); });
    return out;
  }

  // Ends the current accounting interval at `end_tick` and starts the next.
  IntervalReport close_interval(Tick end_tick) {
    if (end_tick < now_) throw Error("close_interval: end before current time");
    advance_to(end_tick);
    if (tech_.volatility == Volatility::PerfectRefresh) settle_all_refreshes(end_tick);
    close_segment(end_tick);

    IntervalReport r;
    r.start_tick = interval_start_;
    r.end_tick = end_tick;
    r.config = config_;
    r.mapping = mapping_;
    r.powered = powered_;
    r.bank_counts = interval_counts_;
    r.bank_ledger = interval_ledger_;
    for (unsigned b = 0; b < kBankCount; ++b) {
      r.total += interval_counts_[b];
      r.ledger += interval_ledger_[b];
    }
    r.total.reconfigurations = interval_global_.reconfigurations;
    r.total.reconfig_cycles = interval_global_.reconfig_cycles;
    r.ledger.buffer_leakage_nJ += interval_buffer_nJ_;
    r.ledger.reconfig_nJ += interval_reconfig_nJ_;
    r.crosscheck_total_nJ = interval_crosscheck_nJ_ + interval_buffer_nJ_ + interval_reconfig_nJ_;
    r.access_latency_cycles = interval_latency_;
    r.latency_cycles = interval_latency_ + static_cast<double>(interval_global_.reconfig_cycles);

    interval_counts_ = {};
    interval_ledger_ = {};
    interval_global_ = {};
    interval_buffer_nJ_ = 0.0;
    interval_reconfig_nJ_ = 0.0;
    interval_crosscheck_nJ_ = 0.0;
    interval_latency_ = 0.0;
    interval_start_ = end_tick;
    return r;
  }

 private:
  void install(const CacheConfig& config, const MappingTable& mapping) {
    if (!config.valid()) throw Error("invalid cache config " + to_string(config));
    VirtualBankLayout layout = build_layout(config);
    mapping.validate(layout);
    std::array<EnergyParams, kBankCount> params{};
    for (const auto& b : mapping.entries()) {
      params[b.flat()] = params_.lookup(tech_.cluster_device[b.cluster], config, opts_.hit_latency);
    }
    if (!(cache_.geometry() == config.geometry())) cache_.reset(config.geometry());
    config_ = config;
    layout_ = std::move(layout);
    mapping_ = mapping;
    bank_params_ = params;
    powered_ = power_state(config, mapping);
    const auto vb = slot_vbanks(config, layout_);
    slot_bank_.resize(vb.size());
    for (std::size_t i = 0; i < vb.size(); ++i) {
      slot_bank_[i] = static_cast<std::uint8_t>(mapping_[vb[i]].flat());
    }
    refresh_retention_ = retention_cycles(tech_.refresh_retention, opts_.clock_ghz);
  }

  void on_block_written(BlockMeta& b, std::uint64_t set, unsigned way, unsigned bank, bool refill) {
    switch (tech_.volatility) {
      case Volatility::Expiring:
        tracker_.on_write(b, set, way, PhysicalBankId::from_flat(bank).retention());
        break;
      case Volatility::PerfectRefresh:
        if (!refill) segment_counts_[bank].refreshes += refresh_on_write(b, b.write_tick, refresh_retention_);
        break;
      case Volatility::NonVolatile:
        break;
    }
  }

  void advance_to(Tick to) {
    advance_to(to, [](const Expiration&) {});
  }

  template <typename F>
  void advance_to(Tick to, F&& extra) {
    if (to < now_) throw Error("advance_time: window runs backwards");
    if (tech_.volatility == Volatility::Expiring) {
      tracker_.advance_time(cache_, now_, to, [&](const Expiration& e) {
        const unsigned bank = bank_of(e.set, e.way);
        auto& c = segment_counts_[bank];
        ++c.expirations;
        if (e.was_dirty) ++c.writebacks;
        expired_lines_[e.address] = static_cast<std::uint8_t>(bank);
        extra(e);
      });
    }
    now_ = to;
  }

  void settle_all_refreshes(Tick to) {
    cache_.for_each_valid([&](std::uint64_t s, unsigned w, BlockMeta& b) {
      segment_counts_[bank_of(s, w)].refreshes += settle_refreshes(b, to, refresh_retention_);
    });
  }

  // Converts the counts gathered since the last segment boundary into energy
  // and latency under the parameters in force during that segment.
  void close_segment(Tick end) {
    const Tick wall = end - segment_start_;
    const double per_refresh = tech_.volatility == Volatility::PerfectRefresh
                                   ? opts_.refresh.per_refresh_energy_nJ
                                   : 0.0;
    const auto banks = config_.bank_count();
    std::array<AccessCounts, kClusterCount> by_cluster{};
    std::array<unsigned, kClusterCount> banks_in_cluster{};
    for (unsigned b = 0; b < kBankCount; ++b) {
      const auto& c = segment_counts_[b];
      if (!powered_.test(b)) continue;
      const auto& p = bank_params_[b];
      const auto share = bank_share(p, banks);
      interval_ledger_[b] += energy_of_interval(c, share, wall, opts_.clock_ghz, per_refresh);
      interval_latency_ += interval_latency(c, p, opts_.miss_penalty_cycles);
      interval_counts_[b] += c;
      const auto cl = PhysicalBankId::from_flat(b).cluster;
      by_cluster[cl] += c;
      ++banks_in_cluster[cl];
    }
    // Clusters share one device, so each can be charged in one step.
    for (unsigned cl = 0; cl < kClusterCount; ++cl) {
      if (banks_in_cluster[cl] == 0) continue;
      auto p = params_.lookup(tech_.cluster_device[cl], config_, opts_.hit_latency);
      p.leakage_mW = p.leakage_mW * banks_in_cluster[cl] / static_cast<double>(banks);
      interval_crosscheck_nJ_ +=
          energy_of_interval(by_cluster[cl], p, wall, opts_.clock_ghz, per_refresh).total();
    }
    if (tech_.volatility == Volatility::PerfectRefresh) {
      const double scaled_mW = opts_.refresh.buffer_leakage_mW *
                               static_cast<double>(config_.size_bytes) /
                               static_cast<double>(CacheConfig::kMaxSize);
      interval_buffer_nJ_ += leakage_energy_nJ(scaled_mW, wall, opts_.clock_ghz);
    }
    segment_counts_ = {};
    segment_start_ = end;
  }

  const ParamTable& params_;
  Technology tech_;
  SimOptions opts_;
  SetAssocCache cache_;
  ExpirationTracker tracker_;
  CacheConfig config_{};
  VirtualBankLayout layout_;
  MappingTable mapping_;
  std::array<EnergyParams, kBankCount> bank_params_{};
  std::bitset<kBankCount> powered_;
  std::vector<std::uint8_t> slot_bank_;
  Tick refresh_retention_ = 0;
  std::unordered_map<Address, std::uint8_t> expired_lines_;
  std::function<void(const AccessEvent&)> observer_;

  Tick now_ = 0;
  Tick interval_start_ = 0;
  Tick segment_start_ = 0;
  std::array<AccessCounts, kBankCount> segment_counts_{};
  std::array<AccessCounts, kBankCount> interval_counts_{};
  std::array<EnergyLedger, kBankCount> interval_ledger_{};
  AccessCounts interval_global_;
  double interval_buffer_nJ_ = 0.0;
  double interval_reconfig_nJ_ = 0.0;
  double interval_crosscheck_nJ_ = 0.0;
  double interval_latency_ = 0.0;
};

}  // namespace halls
