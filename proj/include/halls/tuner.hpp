#pragma once

// Configuration tuning (latency-driven descent over size, line size and
// associativity), retention tuning (rotation sampling plus availability-
// constrained allocation) and the complete HALLS flow.

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "halls/run.hpp"

namespace halls {

struct ConfigTuningResult {
  CacheConfig best;
  std::optional<double> min_latency;
  unsigned intervals_used = 0;
  bool truncated = false;
  std::vector<ConfigSample> samples;
};

// `sample(config)` runs one interval under `config` and returns its latency,
// or nullopt when the trace ran out first.
template <typename Sampler>
ConfigTuningResult tune_configuration(Sampler&& sample,
                                      const DesignSpace& space = DesignSpace::standard()) {
  ConfigTuningResult r;
  if (space.sizes.empty() || space.lines.empty() || space.ways.empty()) {
    throw Error("tune_configuration: empty design space");
  }
  r.best = CacheConfig{space.sizes.front(), space.lines.front(), space.ways.front()};

  auto take = [&](const CacheConfig& c) -> std::optional<double> {
    const std::optional<double> l = sample(c);
    if (!l) {
      r.truncated = true;
      return std::nullopt;
    }
    ++r.intervals_used;
    r.samples.push_back({c, *l});
    return l;
  };

  const auto first = take(r.best);
  if (!first) return r;
  r.min_latency = *first;

  using Field = std::uint64_t CacheConfig::*;
  const std::array<std::pair<Field, const std::vector<std::uint64_t>*>, 3> order = {{
      {&CacheConfig::size_bytes, &space.sizes},
      {&CacheConfig::line_bytes, &space.lines},
      {&CacheConfig::ways, &space.ways},
  }};
  for (const auto& [field, values] : order) {
    std::size_t j = 0;
    while (j < values->size() && (*values)[j] != r.best.*field) ++j;
    for (++j; j < values->size(); ++j) {
      CacheConfig c = r.best;
      c.*field = (*values)[j];
      if (!c.valid()) break;
      const auto l = take(c);
      if (!l) return r;
      if (*l < *r.min_latency) {
        r.min_latency = *l;
        r.best = c;
      } else {
        break;
      }
    }
  }
  return r;
}

using EdpTable = std::vector<std::array<std::optional<double>, kClusterCount>>;

// Ascending vbank id; each vbank takes its cheapest cluster that still has a
// free bank (ties to the lower cluster) and the lowest free bank in it.
inline MappingTable allocate_banks(const EdpTable& edp) {
  if (edp.size() > kBankCount) throw Error("allocate_banks: more vbanks than physical banks");
  std::array<unsigned, kClusterCount> next{};
  MappingTable m;
  for (const auto& row : edp) {
    std::optional<unsigned> pick;
    double best = std::numeric_limits<double>::infinity();
    for (unsigned c = 0; c < kClusterCount; ++c) {
      if (next[c] >= kBanksPerCluster) continue;
      const double v = row[c].value_or(std::numeric_limits<double>::infinity());
      if (!pick || v < best) {
        pick = c;
        best = v;
      }
    }
    m.push({static_cast<std::uint8_t>(*pick), static_cast<std::uint8_t>(next[*pick]++)});
  }
  return m;
}

struct RetentionTuningResult {
  MappingTable mapping;
  EdpTable edp_by_cluster;
  unsigned intervals_used = 0;
  bool truncated = false;
};

// `sample(set_id, mapping)` runs one interval under the rotation mapping and
// returns the EDP of every physical bank, or nullopt when the trace ran out.
template <typename Sampler>
RetentionTuningResult tune_retention(std::size_t vbank_count, Sampler&& sample) {
  RetentionTuningResult r;
  r.edp_by_cluster.assign(vbank_count, {});
  for (unsigned s = 0; s < kClusterCount; ++s) {
    const MappingTable m = tuning_set_mapping(vbank_count, s);
    const std::optional<std::array<std::optional<double>, kBankCount>> bank_edp = sample(s, m);
    if (!bank_edp) {
      r.truncated = true;
      r.mapping = tuning_set_mapping(vbank_count, 0);
      return r;
    }
    ++r.intervals_used;
    for (std::size_t v = 0; v < vbank_count; ++v) {
      r.edp_by_cluster[v][m[v].cluster] = (*bank_edp)[m[v].flat()];
    }
  }
  r.mapping = allocate_banks(r.edp_by_cluster);
  return r;
}

// Samples one interval of `session` under `config`/`mapping`.
inline std::optional<double> sample_latency(Session& session, Phase phase,
                                            const CacheConfig& config,
                                            const MappingTable& mapping) {
  session.apply(config, mapping);
  const auto* rec = session.run_interval(phase, to_string(config));
  if (!rec || !rec->complete) return std::nullopt;
  return rec->report.access_latency_cycles;
}

// Configuration tuning with vbanks placed by a mapping policy.
template <typename MappingFor>
ConfigTuningResult tune_session_configuration(Session& session, MappingFor&& mapping_for) {
  return tune_configuration(
      [&](const CacheConfig& c) {
        return sample_latency(session, Phase::ConfigTuning, c, mapping_for(c));
      },
      session.options().design_space);
}

inline RunResult run_halls(const Trace& trace, const ParamTable& params,
                           const RunOptions& opts = {}) {
  auto set0 = [](const CacheConfig& c) { return tuning_set_mapping(c.bank_count(), 0); };
  const CacheConfig start = opts.fixed_config.value_or(
      CacheConfig{opts.design_space.sizes.front(), opts.design_space.lines.front(),
                  opts.design_space.ways.front()});
  Session session(trace, params, Technology::halls(), opts, start, set0(start));

  TuningOutcome out;
  if (opts.fixed_config) {
    out.best_config = *opts.fixed_config;
  } else {
    auto ct = tune_session_configuration(session, set0);
    out.best_config = ct.best;
    out.min_latency = ct.min_latency;
    out.config_intervals = ct.intervals_used;
    out.config_samples = std::move(ct.samples);
    out.truncated = ct.truncated;
  }

  const auto layout = build_layout(out.best_config);
  if (out.truncated) {
    out.mapping = set0(out.best_config);
    session.apply(out.best_config, out.mapping);
  } else {
    auto rt = tune_retention(layout.size(), [&](unsigned s, const MappingTable& m)
                                                -> std::optional<std::array<std::optional<double>, kBankCount>> {
      session.apply(out.best_config, m);
      const auto* rec = session.run_interval(Phase::RetentionTuning, "set" + std::to_string(s));
      if (!rec || !rec->complete) return std::nullopt;
      return rec->bank_edp;
    });
    out.mapping = rt.mapping;
    out.edp_by_cluster = std::move(rt.edp_by_cluster);
    out.retention_intervals = rt.intervals_used;
    out.truncated = rt.truncated;
    session.apply(out.best_config, out.mapping);
  }
  out.intervals_consumed = out.config_intervals + out.retention_intervals;

  session.run_remaining(Phase::Steady);
  RunResult result = session.finish("HALLS");
  result.truncated = result.truncated || out.truncated;
  result.tuning = std::move(out);
  return result;
}

}  // namespace halls
