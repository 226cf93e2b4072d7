#pragma once

// SRAM and uniform-retention DRS reference systems.

#include <string>

#include "halls/tuner.hpp"

namespace halls {

struct BaselineKind {
  enum class Type : std::uint8_t { Sram, Drs };
  Type type = Type::Sram;
  RetentionClass retention = RetentionClass::R10ms;  // DRS only
  bool adaptable_config = false;

  static BaselineKind sram(bool adaptable = false) { return {Type::Sram, RetentionClass::R10ms, adaptable}; }
  static BaselineKind drs(RetentionClass r = RetentionClass::R10ms, bool adaptable = false) {
    return {Type::Drs, r, adaptable};
  }

  Technology technology() const {
    return type == Type::Sram ? Technology::sram() : Technology::drs(retention);
  }
};

inline std::string to_string(const BaselineKind& k) {
  return k.type == BaselineKind::Type::Sram ? "SRAM" : "DRS-" + to_string(k.retention);
}

inline RunResult run_baseline(const BaselineKind& kind, const Trace& trace, const ParamTable& params,
                              const RunOptions& opts = {}) {
  auto seq = [](const CacheConfig& c) { return sequential_mapping(c.bank_count()); };
  CacheConfig start = opts.fixed_config.value_or(opts.base_config);
  const bool tune = kind.adaptable_config && !opts.fixed_config;
  if (tune) {
    start = CacheConfig{opts.design_space.sizes.front(), opts.design_space.lines.front(),
                        opts.design_space.ways.front()};
  }
  Session session(trace, params, kind.technology(), opts, start, seq(start));

  std::optional<TuningOutcome> out;
  if (tune) {
    auto ct = tune_session_configuration(session, seq);
    TuningOutcome t;
    t.best_config = ct.best;
    t.min_latency = ct.min_latency;
    t.config_intervals = ct.intervals_used;
    t.intervals_consumed = ct.intervals_used;
    t.config_samples = std::move(ct.samples);
    t.truncated = ct.truncated;
    t.mapping = seq(ct.best);
    session.apply(t.best_config, t.mapping);
    out = std::move(t);
  }
  session.run_remaining(Phase::Steady);
  RunResult r = session.finish(to_string(kind));
  if (out) {
    r.truncated = r.truncated || out->truncated;
    r.tuning = std::move(out);
  }
  return r;
}

}  // namespace halls
