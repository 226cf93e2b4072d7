#pragma once

// Experiment driver: run configurations, report CSVs, exhaustive oracles and
// parameter sweeps.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "halls/baselines.hpp"
#include "halls/tuner.hpp"

namespace halls {

using KeyValues = std::map<std::string, std::string>;

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? p : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

// `key = value` lines; '#' starts a comment. Later keys override earlier ones.
inline void parse_key_values(std::string_view text, KeyValues& kv) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(n) + ": expected key = value");
    }
    const auto key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw Error("config line " + std::to_string(n) + ": empty key");
    kv[key] = trim(std::string_view(t).substr(eq + 1));
  }
}

inline KeyValues load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  KeyValues kv;
  parse_key_values(ss.str(), kv);
  return kv;
}

struct SystemSpec {
  bool halls = false;
  BaselineKind baseline;

  std::string name() const { return halls ? "HALLS" : to_string(baseline); }
};

struct RunConfig {
  std::string workload_name = "synthetic";
  std::optional<std::string> trace_path;
  std::optional<WorkloadSpec> workload;
  std::vector<SystemSpec> systems;
  RunOptions run;
  std::string params_path;  // empty: shipped table
  std::string out_dir = "out";
  bool emit_mapping = false;
  std::uint64_t oracle_cap = 1024;
  std::vector<std::string> sweep_values;
};

namespace detail {

inline std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  if (!parse_uint(v, out)) throw Error(key + ": expected a non-negative integer, got '" + v + "'");
  return out;
}

inline double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw Error(key + ": expected a number, got '" + v + "'");
  return d;
}

inline bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(key + ": expected true/false, got '" + v + "'");
}

inline std::array<double, 3> to_weights(const std::string& key, const std::string& v) {
  const auto parts = split(v, ',');
  if (parts.size() != 3) throw Error(key + ": expected three comma-separated weights");
  return {to_double(key, parts[0]), to_double(key, parts[1]), to_double(key, parts[2])};
}

inline bool is_stream_key(const std::string& k) {
  return k == "footprint" || k == "write_fraction" || k == "gap_weights" || k == "ipc" ||
         k == "length" || k == "touch_bytes";
}

inline void apply_stream_key(CoreStream& s, const std::string& full, const std::string& k,
                             const std::string& v) {
  if (k == "footprint") s.footprint_bytes = parse_size(v);
  if (k == "write_fraction") s.write_fraction = to_double(full, v);
  if (k == "gap_weights") s.gap_weights = to_weights(full, v);
  if (k == "ipc") s.instruction_rate = parse_rational(v);
  if (k == "length") s.length = to_u64(full, v);
  if (k == "touch_bytes") s.touch_bytes = static_cast<unsigned>(to_u64(full, v));
}

inline SystemSpec parse_system(const std::string& v, RetentionClass drs_default, bool adaptable) {
  SystemSpec s;
  if (v == "HALLS") {
    s.halls = true;
  } else if (v == "SRAM") {
    s.baseline = BaselineKind::sram(adaptable);
  } else if (v == "DRS") {
    s.baseline = BaselineKind::drs(drs_default, adaptable);
  } else if (v.rfind("DRS-", 0) == 0) {
    s.baseline = BaselineKind::drs(parse_retention(v.substr(4)), adaptable);
  } else {
    throw Error("systems: unknown system '" + v + "' (HALLS, SRAM, DRS, DRS-<retention>)");
  }
  return s;
}

}  // namespace detail

inline RunConfig build_run_config(const KeyValues& kv) {
  RunConfig rc;
  auto get = [&](const char* k) -> const std::string* {
    auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };

  std::uint64_t seed = 1;
  if (auto v = get("seed")) seed = detail::to_u64("seed", *v);
  rc.run.sim.seed = seed;
  if (auto v = get("clock_ghz")) rc.run.sim.clock_ghz = detail::to_double("clock_ghz", *v);
  if (!(rc.run.sim.clock_ghz > 0)) throw Error("clock_ghz: must be positive");
  if (auto v = get("miss_penalty")) {
    rc.run.sim.miss_penalty_cycles = static_cast<unsigned>(detail::to_u64("miss_penalty", *v));
  }
  if (auto v = get("interval_instructions")) {
    rc.run.interval_instructions = detail::to_u64("interval_instructions", *v);
    if (rc.run.interval_instructions == 0) throw Error("interval_instructions: must be positive");
  }
  if (auto v = get("hit_latency")) {
    if (*v == "printed") {
      rc.run.sim.hit_latency = HitLatencySource::Printed;
    } else if (*v == "alt") {
      rc.run.sim.hit_latency = HitLatencySource::Alternate;
    } else {
      throw Error("hit_latency: expected printed or alt");
    }
  }
  if (auto v = get("refresh_energy_nj")) {
    rc.run.sim.refresh.per_refresh_energy_nJ = detail::to_double("refresh_energy_nj", *v);
  }
  if (auto v = get("buffer_leakage_mw")) {
    rc.run.sim.refresh.buffer_leakage_mW = detail::to_double("buffer_leakage_mw", *v);
  }
  rc.run.sim.refresh.validate();
  if (auto v = get("base_config")) rc.run.base_config = parse_config(*v);
  if (auto v = get("fixed_config")) rc.run.fixed_config = parse_config(*v);
  if (auto v = get("end_tick")) rc.run.end_tick = detail::to_u64("end_tick", *v);
  if (auto v = get("params")) rc.params_path = *v;
  if (auto v = get("out")) rc.out_dir = *v;
  if (auto v = get("emit_mapping")) rc.emit_mapping = detail::to_bool("emit_mapping", *v);
  if (auto v = get("oracle_cap")) rc.oracle_cap = detail::to_u64("oracle_cap", *v);
  if (auto v = get("sweep_values")) rc.sweep_values = split(*v, ',');

  RetentionClass drs = RetentionClass::R10ms;
  if (auto v = get("drs_retention")) drs = parse_retention(*v);
  bool adaptable = false;
  if (auto v = get("adaptable_config")) adaptable = detail::to_bool("adaptable_config", *v);
  for (const auto& s : split(get("systems") ? *get("systems") : "SRAM,DRS,HALLS", ',')) {
    rc.systems.push_back(detail::parse_system(s, drs, adaptable));
  }

  // Workload: a trace file or generator keys, never both.
  bool generator = false;
  for (const auto& [k, v] : kv) {
    if (detail::is_stream_key(k) || k == "cores" || k == "workload_seed" || k.rfind("core", 0) == 0) {
      generator = true;
    }
  }
  if (auto v = get("trace")) {
    if (generator) throw Error("workload: give either trace or generator keys, not both");
    rc.trace_path = *v;
    rc.workload_name = std::filesystem::path(*v).stem().string();
  } else {
    WorkloadSpec w;
    const std::uint64_t cores = get("cores") ? detail::to_u64("cores", *get("cores")) : 1;
    if (cores == 0) throw Error("cores: must be positive");
    CoreStream base;
    base.seed = get("workload_seed") ? detail::to_u64("workload_seed", *get("workload_seed")) : seed;
    for (const auto& [k, v] : kv) {
      if (detail::is_stream_key(k)) detail::apply_stream_key(base, k, k, v);
    }
    w.cores.assign(cores, base);
    for (const auto& [k, v] : kv) {
      if (k.rfind("core", 0) != 0 || k == "cores") continue;
      const auto dot = k.find('.');
      std::uint64_t idx = 0;
      if (dot == std::string::npos || !detail::parse_uint(k.substr(4, dot - 4), idx)) {
        throw Error("unknown key '" + k + "'");
      }
      if (idx >= cores) throw Error(k + ": core index out of range");
      const auto field = k.substr(dot + 1);
      if (!detail::is_stream_key(field)) throw Error("unknown key '" + k + "'");
      detail::apply_stream_key(w.cores[idx], k, field, v);
    }
    validate(w);
    rc.workload = std::move(w);
  }
  if (auto v = get("workload")) rc.workload_name = *v;

  static const char* known[] = {
      "systems", "drs_retention", "adaptable_config", "trace", "cores", "footprint",
      "write_fraction", "gap_weights", "ipc", "length", "touch_bytes", "workload_seed",
      "clock_ghz", "miss_penalty", "seed", "interval_instructions", "params", "out",
      "hit_latency", "refresh_energy_nj", "buffer_leakage_mw", "fixed_config", "base_config",
      "end_tick", "workload", "emit_mapping", "oracle_cap", "sweep_values"};
  for (const auto& [k, v] : kv) {
    if (k.rfind("core", 0) == 0 && k != "cores") continue;
    if (std::find_if(std::begin(known), std::end(known), [&](const char* n) { return k == n; }) ==
        std::end(known)) {
      throw Error("unknown key '" + k + "'");
    }
  }

  if (rc.trace_path && !std::filesystem::exists(*rc.trace_path)) {
    throw Error("trace file '" + *rc.trace_path + "' does not exist");
  }
  if (!rc.params_path.empty() && !std::filesystem::exists(rc.params_path)) {
    throw Error("parameter file '" + rc.params_path + "' does not exist");
  }
  return rc;
}

inline Trace load_workload(const RunConfig& rc) {
  if (rc.trace_path) return read_trace(*rc.trace_path);
  return generate_workload(*rc.workload, 1.0 / rc.run.sim.clock_ghz);
}

inline ParamTable load_params(const RunConfig& rc) {
  return rc.params_path.empty() ? ParamTable::shipped() : ParamTable::load(rc.params_path);
}

inline RunResult run_system(const SystemSpec& s, const Trace& trace, const ParamTable& params,
                            const RunOptions& opts) {
  return s.halls ? run_halls(trace, params, opts) : run_baseline(s.baseline, trace, params, opts);
}

// Whole trace under one configuration and mapping, no tuning.
inline RunResult evaluate_fixed(const Technology& tech, const Trace& trace, const ParamTable& params,
                                const RunOptions& opts, const CacheConfig& config,
                                const MappingTable& mapping, std::string name = "fixed") {
  Session s(trace, params, tech, opts, config, mapping);
  s.run_remaining(Phase::Steady);
  return s.finish(std::move(name));
}

// Refresh energy as a share of the cache's own energy (buffer leakage excluded).
inline double refresh_energy_percent(const EnergyLedger& l) {
  const double base = l.total() - l.buffer_leakage_nJ;
  return base > 0 ? 100.0 * l.refresh_nJ / base : 0.0;
}

inline double run_edp(const RunResult& r) { return edp(r.total.ledger.total(), r.total.latency_cycles); }

// ---------------------------------------------------------------------------
// CSV output

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string mapping_clusters(const MappingTable& m) {
  std::string s;
  for (const auto& b : m.entries()) s += static_cast<char>('0' + b.cluster);
  return s;
}

inline const char* kSummaryHeader =
    "final_config,mapping_clusters,intervals,tuning_intervals,truncated,accesses,read_hits,"
    "write_hits,misses,hit_rate,writebacks,expirations,expiration_misses,refreshes,"
    "reconfigurations,dynamic_nJ,leakage_nJ,refresh_nJ,buffer_leakage_nJ,reconfig_nJ,total_nJ,"
    "refresh_pct,latency_cycles,reconfig_cycles,edp,energy_vs_sram,latency_vs_sram,edp_vs_sram";

inline void write_summary_fields(std::ostream& os, const RunResult& r, const RunResult* sram) {
  const auto& c = r.total.counts;
  const auto& l = r.total.ledger;
  os << to_string(r.final_config) << ',' << mapping_clusters(r.final_mapping) << ','
     << r.total.intervals << ',' << (r.tuning ? r.tuning->intervals_consumed : 0) << ','
     << (r.truncated ? 1 : 0) << ',' << c.accesses() << ',' << c.read_hits << ',' << c.write_hits
     << ',' << c.misses() << ',' << num(r.hit_rate()) << ',' << c.writebacks << ','
     << c.expirations << ',' << c.expiration_misses << ',' << c.refreshes << ','
     << c.reconfigurations << ',' << num(l.dynamic_nJ) << ',' << num(l.leakage_nJ) << ','
     << num(l.refresh_nJ) << ',' << num(l.buffer_leakage_nJ) << ',' << num(l.reconfig_nJ) << ','
     << num(l.total()) << ',' << num(refresh_energy_percent(l)) << ','
     << num(r.total.latency_cycles) << ',' << c.reconfig_cycles << ',' << num(run_edp(r));
  auto ratio = [](double a, double b) { return b > 0 ? num(a / b) : std::string(); };
  if (sram) {
    os << ',' << ratio(l.total(), sram->total.ledger.total()) << ','
       << ratio(r.total.latency_cycles, sram->total.latency_cycles) << ','
       << ratio(run_edp(r), run_edp(*sram));
  } else {
    os << ",,,";
  }
  os << '\n';
}

inline const RunResult* find_sram(const std::vector<RunResult>& runs) {
  for (const auto& r : runs) {
    if (r.system == "SRAM") return &r;
  }
  return nullptr;
}

inline void write_summary(std::ostream& os, const std::string& workload,
                          const std::vector<RunResult>& runs) {
  os << "workload,system," << kSummaryHeader << '\n';
  const RunResult* sram = find_sram(runs);
  for (const auto& r : runs) {
    os << workload << ',' << r.system << ',';
    write_summary_fields(os, r, sram);
  }
}

inline void write_tuning_log(std::ostream& os, const std::string& workload,
                             const std::vector<RunResult>& runs) {
  os << "workload,system,phase,interval,label,complete,start_tick,end_tick,config,"
        "access_latency_cycles,latency_cycles,energy_nJ,edp,bank_edp\n";
  for (const auto& r : runs) {
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
      const auto& iv = r.intervals[i];
      const auto& rep = iv.report;
      os << workload << ',' << r.system << ',' << to_string(iv.phase) << ',' << i << ','
         << iv.label << ',' << (iv.complete ? 1 : 0) << ',' << rep.start_tick << ','
         << rep.end_tick << ',' << to_string(rep.config) << ',' << num(rep.access_latency_cycles)
         << ',' << num(rep.latency_cycles) << ',' << num(rep.ledger.total()) << ','
         << num(edp(rep.ledger.total(), rep.latency_cycles)) << ',';
      bool first = true;
      for (unsigned b = 0; b < kBankCount; ++b) {
        if (!iv.bank_edp[b]) continue;
        os << (first ? "" : ";") << b << ':' << num(*iv.bank_edp[b]);
        first = false;
      }
      os << '\n';
    }
  }
}

inline void write_mapping(std::ostream& os, const std::string& workload,
                          const std::vector<RunResult>& runs) {
  write_mapping_csv_header(os, "workload,system,");
  for (const auto& r : runs) {
    write_mapping_csv_rows(os, r.final_layout, r.final_mapping, workload + "," + r.system + ",");
  }
}

inline void write_per_bank(std::ostream& os, const std::string& workload,
                           const std::vector<RunResult>& runs, const Technology& halls_tech) {
  os << "workload,system,bank,cluster,device,powered_at_end,read_hits,write_hits,read_misses,"
        "write_misses,writebacks,expirations,expiration_misses,refreshes,dynamic_nJ,leakage_nJ,"
        "refresh_nJ,total_nJ\n";
  for (const auto& r : runs) {
    Technology tech = halls_tech;
    if (r.system == "SRAM") tech = Technology::sram();
    if (r.system.rfind("DRS-", 0) == 0) tech = Technology::drs(parse_retention(r.system.substr(4)));
    const auto on = power_state(r.final_config, r.final_mapping);
    for (unsigned b = 0; b < kBankCount; ++b) {
      const auto id = PhysicalBankId::from_flat(b);
      const auto& c = r.bank_counts[b];
      const auto& l = r.bank_ledger[b];
      os << workload << ',' << r.system << ',' << b << ',' << unsigned{id.cluster} << ','
         << to_string(tech.cluster_device[id.cluster]) << ',' << (on.test(b) ? 1 : 0) << ','
         << c.read_hits << ',' << c.write_hits << ',' << c.read_misses << ',' << c.write_misses
         << ',' << c.writebacks << ',' << c.expirations << ',' << c.expiration_misses << ','
         << c.refreshes << ',' << num(l.dynamic_nJ) << ',' << num(l.leakage_nJ) << ','
         << num(l.refresh_nJ) << ',' << num(l.total()) << '\n';
    }
  }
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Commands. Each returns a process exit code: 0 success, 1 invalid input,
// 2 missing parameter entry.

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const MissingParams& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline std::vector<RunResult> run_all(const RunConfig& rc, const Trace& trace,
                                      const ParamTable& params) {
  std::vector<RunResult> runs;
  for (const auto& s : rc.systems) runs.push_back(run_system(s, trace, params, rc.run));
  return runs;
}

inline int cmd_run(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto params = load_params(rc);
    const auto trace = load_workload(rc);
    const auto runs = run_all(rc, trace, params);
    std::filesystem::create_directories(rc.out_dir);
    const std::filesystem::path dir(rc.out_dir);
    std::ostringstream summary, log, mapping, banks;
    write_summary(summary, rc.workload_name, runs);
    write_tuning_log(log, rc.workload_name, runs);
    write_mapping(mapping, rc.workload_name, runs);
    write_per_bank(banks, rc.workload_name, runs, Technology::halls());
    write_text(dir / "summary.csv", summary.str());
    write_text(dir / "tuning_log.csv", log.str());
    write_text(dir / "mapping.csv", mapping.str());
    write_text(dir / "per_bank.csv", banks.str());
    out << summary.str();
    if (rc.emit_mapping) out << mapping.str();
    return 0;
  });
}

enum class OracleScope : std::uint8_t { Retention, Config };

inline OracleScope parse_oracle_scope(const std::string& s) {
  if (s == "retention") return OracleScope::Retention;
  if (s == "config") return OracleScope::Config;
  throw Error("unknown oracle scope '" + s + "' (retention, config)");
}

struct OracleCandidate {
  std::string label;
  CacheConfig config;
  MappingTable mapping;
  double energy_nJ = 0.0;
  double latency_cycles = 0.0;
  double edp = 0.0;
};

// Mapping that places vbank i in cluster clusters[i], lowest free bank first.
inline MappingTable mapping_from_clusters(const std::vector<unsigned>& clusters) {
  std::array<std::uint8_t, kClusterCount> next{};
  MappingTable m;
  for (unsigned c : clusters) {
    if (c >= kClusterCount || next[c] >= kBanksPerCluster) throw Error("cluster overflow");
    m.push({static_cast<std::uint8_t>(c), next[c]++});
  }
  return m;
}

// Every candidate of the scope, ranked by the scope's objective (EDP for
// retention, latency for config); ties keep enumeration order.
inline std::vector<OracleCandidate> run_oracle(const RunConfig& rc, OracleScope scope,
                                               const Trace& trace, const ParamTable& params) {
  std::vector<OracleCandidate> out;
  if (scope == OracleScope::Retention) {
    const CacheConfig config = rc.run.fixed_config.value_or(rc.run.base_config);
    const auto n = config.bank_count();
    long double count = 1;
    for (std::uint64_t i = 0; i < n; ++i) count *= kClusterCount;
    if (count > static_cast<long double>(rc.oracle_cap)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "oracle scope too large: %.0Lf candidate mappings (cap %llu)",
                    count, static_cast<unsigned long long>(rc.oracle_cap));
      throw Error(buf);
    }
    const auto total = static_cast<std::uint64_t>(count);
    for (std::uint64_t k = 0; k < total; ++k) {
      std::vector<unsigned> clusters(n);
      std::uint64_t x = k;
      for (std::uint64_t i = n; i-- > 0;) {
        clusters[i] = static_cast<unsigned>(x % kClusterCount);
        x /= kClusterCount;
      }
      OracleCandidate c;
      c.config = config;
      c.mapping = mapping_from_clusters(clusters);
      c.label = mapping_clusters(c.mapping);
      out.push_back(std::move(c));
    }
  } else {
    std::vector<CacheConfig> lattice;
    if (rc.sweep_values.empty()) {
      lattice = rc.run.design_space.lattice();
    } else {
      for (const auto& v : rc.sweep_values) lattice.push_back(parse_config(v));
    }
    if (lattice.size() > rc.oracle_cap) {
      throw Error("oracle scope too large: " + std::to_string(lattice.size()) +
                  " candidate configs (cap " + std::to_string(rc.oracle_cap) + ")");
    }
    for (const auto& cfg : lattice) {
      OracleCandidate c;
      c.config = cfg;
      c.label = to_string(cfg);
      out.push_back(std::move(c));
    }
  }

  const SystemSpec sys = rc.systems.empty() ? SystemSpec{true, {}} : rc.systems.front();
  const Technology tech =
      scope == OracleScope::Retention ? Technology::halls()
                                      : (sys.halls ? Technology::halls() : sys.baseline.technology());
  for (auto& c : out) {
    if (scope == OracleScope::Config) {
      c.mapping = sys.halls ? tuning_set_mapping(c.config.bank_count(), 0)
                            : sequential_mapping(c.config.bank_count());
    }
    const auto r = evaluate_fixed(tech, trace, params, rc.run, c.config, c.mapping);
    c.energy_nJ = r.total.ledger.total();
    c.latency_cycles = r.total.latency_cycles;
    c.edp = run_edp(r);
  }
  std::stable_sort(out.begin(), out.end(), [&](const OracleCandidate& a, const OracleCandidate& b) {
    return scope == OracleScope::Retention ? a.edp < b.edp : a.latency_cycles < b.latency_cycles;
  });
  return out;
}

inline int cmd_oracle(const RunConfig& rc, const std::string& scope_name, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto scope = parse_oracle_scope(scope_name);
    const auto params = load_params(rc);
    const auto trace = load_workload(rc);
    const auto ranked = run_oracle(rc, scope, trace, params);
    std::ostringstream csv;
    csv << "rank,candidate,config,energy_nJ,latency_cycles,edp\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto& c = ranked[i];
      csv << i << ',' << c.label << ',' << to_string(c.config) << ',' << num(c.energy_nJ) << ','
          << num(c.latency_cycles) << ',' << num(c.edp) << '\n';
    }
    std::filesystem::create_directories(rc.out_dir);
    write_text(std::filesystem::path(rc.out_dir) / ("oracle_" + scope_name + ".csv"), csv.str());
    out << csv.str();
    return 0;
  });
}

inline const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {"retention_class", "config", "write_fraction",
                                                "lifetime_band"};
  return axes;
}

// One block of rows per axis value: every configured system (DRS at each
// class for retention_class).
inline std::string run_sweep(const KeyValues& kv, const std::vector<std::string>& axes) {
  if (axes.empty()) throw Error("sweep: empty axis list");
  for (const auto& a : axes) {
    if (std::find(sweep_axes().begin(), sweep_axes().end(), a) == sweep_axes().end()) {
      throw Error("sweep: unknown axis '" + a + "' (retention_class, config, write_fraction, "
                  "lifetime_band)");
    }
  }
  const RunConfig base = build_run_config(kv);
  const auto params = load_params(base);
  std::ostringstream csv;
  csv << "axis,value,workload,system," << kSummaryHeader << '\n';

  for (const auto& axis : axes) {
    std::vector<std::string> values = base.sweep_values;
    if (values.empty()) {
      if (axis == "retention_class") values = {"100us", "1ms", "10ms", "100ms"};
      if (axis == "write_fraction") values = {"0", "0.25", "0.5", "0.75", "1"};
      if (axis == "lifetime_band") values = {"short", "medium", "long"};
      if (axis == "config") {
        for (const auto& c : base.run.design_space.lattice()) values.push_back(to_string(c));
      }
    }
    for (const auto& v : values) {
      KeyValues point = kv;
      if (axis == "retention_class") {
        point["systems"] = "DRS-" + to_string(parse_retention(v));
      } else if (axis == "config") {
        point["fixed_config"] = to_string(parse_config(v));
      } else if (axis == "write_fraction" || axis == "lifetime_band") {
        if (base.trace_path) throw Error("sweep: axis '" + axis + "' needs a generated workload");
        for (auto it = point.begin(); it != point.end();) {
          const bool per_core = it->first.rfind("core", 0) == 0 && it->first != "cores";
          const std::string field = axis == "write_fraction" ? ".write_fraction" : ".gap_weights";
          if (per_core && it->first.size() > field.size() &&
              it->first.compare(it->first.size() - field.size(), field.size(), field) == 0) {
            it = point.erase(it);
          } else {
            ++it;
          }
        }
        if (axis == "write_fraction") {
          point["write_fraction"] = v;
        } else if (v == "short") {
          point["gap_weights"] = "1,0,0";
        } else if (v == "medium") {
          point["gap_weights"] = "0,1,0";
        } else if (v == "long") {
          point["gap_weights"] = "0,0,1";
        } else {
          throw Error("sweep: lifetime_band values are short, medium, long");
        }
      }
      point.erase("sweep_values");
      const RunConfig rc = build_run_config(point);
      const auto trace = load_workload(rc);
      const auto runs = run_all(rc, trace, params);
      const RunResult* sram = find_sram(runs);
      for (const auto& r : runs) {
        csv << axis << ',' << v << ',' << rc.workload_name << ',' << r.system << ',';
        write_summary_fields(csv, r, sram);
      }
    }
  }
  return csv.str();
}

inline int cmd_sweep(const KeyValues& kv, const std::vector<std::string>& axes, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const auto text = run_sweep(kv, axes);
    const RunConfig rc = build_run_config(kv);
    std::filesystem::create_directories(rc.out_dir);
    write_text(std::filesystem::path(rc.out_dir) / "sweep.csv", text);
    out << text;
    return 0;
  });
}

inline int cmd_gen_trace(const RunConfig& rc, const std::string& path, std::ostream& out,
                         std::ostream& err) {
  return guarded(err, [&] {
    if (!rc.workload) throw Error("gen-trace: needs generator keys, not a trace file");
    const auto trace = generate_workload(*rc.workload, 1.0 / rc.run.sim.clock_ghz);
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    write_trace(trace, path);
    out << "wrote " << trace.size() << " accesses to " << path << '\n';
    return 0;
  });
}

}  // namespace halls
