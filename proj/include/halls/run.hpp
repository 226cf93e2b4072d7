#pragma once

// Interval plumbing shared by the HALLS flow and the baselines: splitting a
// trace into instruction intervals, driving the simulator through them and
// collecting per-phase and whole-run statistics.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "halls/simulator.hpp"

namespace halls {

struct RunOptions {
  SimOptions sim;
  std::uint64_t interval_instructions = 10'000'000;
  // Starting point of configuration tuning and the configuration of
  // non-adaptable baselines.
  CacheConfig base_config = CacheConfig::maximum();
  // Skips configuration tuning when set.
  std::optional<CacheConfig> fixed_config;
  // Extends the last interval (or an empty trace) to this tick.
  Tick end_tick = 0;
  DesignSpace design_space = DesignSpace::standard();
  // Sees every access after it is serviced.
  std::function<void(const AccessEvent&)> observer;
};

struct IntervalSlice {
  std::size_t begin = 0;
  std::size_t end = 0;
  Tick end_tick = 0;
  bool complete = false;  // reached the instruction threshold
};

// An interval ends at the first access whose instructions_retired reaches the
// interval's base plus the interval length; that access opens the next one.
// The first interval starts at tick 0 with base 0.
class IntervalCursor {
 public:
  IntervalCursor(const Trace& trace, std::uint64_t instructions, Tick end_tick = 0)
      : trace_(trace), instructions_(instructions), end_tick_(end_tick) {
    if (instructions == 0) throw Error("interval length must be positive");
  }

  bool exhausted() const { return pos_ == trace_.size() && emitted_; }

  std::optional<IntervalSlice> next() {
    if (pos_ == trace_.size()) {
      if (emitted_ || end_tick_ == 0) return std::nullopt;
      emitted_ = true;
      return IntervalSlice{pos_, pos_, end_tick_, false};
    }
    emitted_ = true;
    const std::uint64_t threshold = base_ + instructions_;
    IntervalSlice s;
    s.begin = pos_;
    std::size_t i = pos_;
    while (i < trace_.size() && trace_[i].instructions_retired < threshold) ++i;
    s.end = i;
    if (i < trace_.size()) {
      s.complete = true;
      s.end_tick = trace_[i].tick;
      base_ = trace_[i].instructions_retired;
    } else {
      s.end_tick = std::max(trace_.back().tick, end_tick_);
    }
    pos_ = i;
    return s;
  }

 private:
  const Trace& trace_;
  std::uint64_t instructions_;
  Tick end_tick_;
  std::size_t pos_ = 0;
  std::uint64_t base_ = 0;
  bool emitted_ = false;
};

enum class Phase : std::uint8_t { ConfigTuning = 0, RetentionTuning = 1, Steady = 2 };
inline constexpr std::array<Phase, 3> kPhases = {Phase::ConfigTuning, Phase::RetentionTuning,
                                                 Phase::Steady};

inline std::string to_string(Phase p) {
  switch (p) {
    case Phase::ConfigTuning: return "config";
    case Phase::RetentionTuning: return "retention";
    case Phase::Steady: return "steady";
  }
  return "?";
}

struct IntervalRecord {
  Phase phase = Phase::Steady;
  std::string label;  // sampled config or tuning set
  bool complete = false;
  IntervalReport report;
  // (bank dynamic + leakage + refresh) x interval access latency; powered banks only.
  std::array<std::optional<double>, kBankCount> bank_edp{};
};

struct Totals {
  AccessCounts counts;
  EnergyLedger ledger;
  double crosscheck_total_nJ = 0.0;
  double access_latency_cycles = 0.0;
  double latency_cycles = 0.0;
  Tick wall_cycles = 0;
  unsigned intervals = 0;

  void add(const IntervalReport& r) {
    counts += r.total;
    ledger += r.ledger;
    crosscheck_total_nJ += r.crosscheck_total_nJ;
    access_latency_cycles += r.access_latency_cycles;
    latency_cycles += r.latency_cycles;
    wall_cycles += r.wall_cycles();
    ++intervals;
  }
};

struct ConfigSample {
  CacheConfig config;
  double latency_cycles = 0.0;
};

struct TuningOutcome {
  CacheConfig best_config;
  std::optional<double> min_latency;
  MappingTable mapping;
  unsigned config_intervals = 0;
  unsigned retention_intervals = 0;
  unsigned intervals_consumed = 0;
  std::vector<ConfigSample> config_samples;
  // edp_by_cluster[vbank][cluster]
  std::vector<std::array<std::optional<double>, kClusterCount>> edp_by_cluster;
  bool truncated = false;
};

struct RunResult {
  std::string system;
  CacheConfig final_config;
  VirtualBankLayout final_layout;
  MappingTable final_mapping;
  std::vector<IntervalRecord> intervals;
  std::array<Totals, 3> phase{};
  Totals total;
  std::array<AccessCounts, kBankCount> bank_counts{};
  std::array<EnergyLedger, kBankCount> bank_ledger{};
  std::optional<TuningOutcome> tuning;
  bool truncated = false;

  double hit_rate() const {
    const auto n = total.counts.accesses();
    return n ? static_cast<double>(total.counts.read_hits + total.counts.write_hits) /
                   static_cast<double>(n)
             : 0.0;
  }
};

// One simulation walked interval by interval.
class Session {
 public:
  Session(const Trace& trace, const ParamTable& params, Technology tech, const RunOptions& opts,
          const CacheConfig& config, const MappingTable& mapping)
      : trace_(trace),
        opts_(opts),
        cursor_(trace, opts.interval_instructions, opts.end_tick),
        sim_(params, tech, opts.sim, config, mapping, 0) {
    validate_trace(trace);
    if (opts.observer) sim_.set_observer(opts.observer);
  }

  LlcSimulator& sim() { return sim_; }
  const RunOptions& options() const { return opts_; }
  bool exhausted() const { return cursor_.exhausted(); }

  void apply(const CacheConfig& config, const MappingTable& mapping) {
    sim_.configure(config, mapping, sim_.now());
  }

  // Runs the next interval; nullptr once the trace is used up.
  const IntervalRecord* run_interval(Phase phase, std::string label) {
    auto slice = cursor_.next();
    if (!slice) return nullptr;
    for (std::size_t i = slice->begin; i < slice->end; ++i) sim_.access(trace_[i]);
    IntervalRecord rec;
    rec.phase = phase;
    rec.label = std::move(label);
    rec.complete = slice->complete;
    rec.report = sim_.close_interval(slice->end_tick);
    for (unsigned b = 0; b < kBankCount; ++b) {
      if (!rec.report.powered.test(b)) continue;
      const auto& l = rec.report.bank_ledger[b];
      rec.bank_edp[b] =
          edp(l.dynamic_nJ + l.leakage_nJ + l.refresh_nJ, rec.report.access_latency_cycles);
    }
    result_.phase[static_cast<std::size_t>(phase)].add(rec.report);
    result_.total.add(rec.report);
    for (unsigned b = 0; b < kBankCount; ++b) {
      result_.bank_counts[b] += rec.report.bank_counts[b];
      result_.bank_ledger[b] += rec.report.bank_ledger[b];
    }
    result_.intervals.push_back(std::move(rec));
    return &result_.intervals.back();
  }

  void run_remaining(Phase phase) {
    while (run_interval(phase, to_string(sim_.config()))) {
    }
  }

  RunResult finish(std::string system) {
    result_.system = std::move(system);
    result_.final_config = sim_.config();
    result_.final_layout = sim_.layout();
    result_.final_mapping = sim_.mapping();
    // Only an unfinished tuning phase counts as truncation; the steady phase
    // always ends with a partial interval.
    bool tuning_cut = false;
    for (const auto& r : result_.intervals) {
      if (!r.complete && r.phase != Phase::Steady) tuning_cut = true;
    }
    result_.truncated = tuning_cut;
    return std::move(result_);
  }

 private:
  const Trace& trace_;
  RunOptions opts_;
  IntervalCursor cursor_;
  LlcSimulator sim_;
  RunResult result_;
};

}  // namespace halls
