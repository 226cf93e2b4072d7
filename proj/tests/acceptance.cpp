// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "halls/harness.hpp"

using namespace halls;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and limits.
constexpr double kLedgerRelTol = 1e-9;
constexpr double kRegretBound = 1.10;  // tuner EDP / oracle EDP
constexpr double kRefreshTrendRatio = 5.0;
constexpr unsigned kMaxConfigIntervals = 10;
constexpr unsigned kMaxSuiteConfigIntervals = 7;
constexpr double kEngineSeconds = 10.0;
constexpr double kTrendSeconds = 60.0;
constexpr double kShortLivedShare = 0.5;
constexpr Tick kOneMs = 2'000'000;  // cycles at 2 GHz

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---------------------------------------------------------------------------
// Checks applied to every run the suite performs.

// Retention per cluster in cycles at 2 GHz, written out independently of the
// library tables.
constexpr Tick kClusterRetention[kClusterCount] = {200'000, 2'000'000, 20'000'000, 200'000'000};

struct Watch {
  double worst_ledger = 0.0;
  std::uint64_t intervals_checked = 0;
  std::uint64_t runs_checked = 0;
  std::uint64_t mappings_checked = 0;
  std::vector<std::string> mapping_faults;
  std::uint64_t hits_checked = 0;
  std::uint64_t stale_hits = 0;
  std::uint64_t retention_mismatch = 0;

  void interval(const IntervalReport& r) {
    EnergyLedger banks;
    for (const auto& b : r.bank_ledger) banks += b;
    const double total = r.ledger.total();
    const double parts = r.ledger.dynamic_nJ + r.ledger.leakage_nJ + r.ledger.refresh_nJ +
                         r.ledger.buffer_leakage_nJ + r.ledger.reconfig_nJ;
    worst_ledger = std::max(
        {worst_ledger, rel_err(parts, total),
         rel_err(banks.total() + r.ledger.buffer_leakage_nJ + r.ledger.reconfig_nJ, total),
         rel_err(r.crosscheck_total_nJ, total)});
    ++intervals_checked;
  }

  void run(const RunResult& r) {
    ++runs_checked;
    EnergyLedger sum;
    for (const auto& iv : r.intervals) {
      interval(iv.report);
      sum += iv.report.ledger;
      if (r.tuning) mapping(r.system + " interval", iv.report.config, iv.report.mapping);
    }
    worst_ledger = std::max(worst_ledger, rel_err(sum.total(), r.total.ledger.total()));
    EnergyLedger banks;
    for (const auto& b : r.bank_ledger) banks += b;
    worst_ledger = std::max(
        worst_ledger,
        rel_err(banks.total() + r.total.ledger.buffer_leakage_nJ + r.total.ledger.reconfig_nJ,
                r.total.ledger.total()));
    if (r.system == "HALLS") mapping(r.system, r.final_config, r.final_mapping);
  }

  void mapping(const std::string& who, const CacheConfig& c, const MappingTable& m) {
    ++mappings_checked;
    const auto layout = build_layout(c);
    std::string why = m.check(layout);
    std::array<unsigned, kClusterCount> per{};
    std::vector<bool> used(kBankCount, false);
    for (const auto& b : m.entries()) {
      if (b.cluster < kClusterCount && b.bank < kBanksPerCluster) {
        ++per[b.cluster];
        const unsigned flat = b.cluster * kBanksPerCluster + b.bank;
        if (used[flat]) why += " duplicate";
        used[flat] = true;
      } else {
        why += " out of range";
      }
    }
    for (unsigned n : per) {
      if (n > kBanksPerCluster) why += " cluster over capacity";
    }
    if (m.size() != layout.size()) why += " coverage";
    if (!why.empty() && mapping_faults.size() < 5) mapping_faults.push_back(who + ":" + why);
    if (!why.empty() && mapping_faults.size() >= 5) mapping_faults.back() = "(more)";
  }

  // Shadow write/fill time per cache slot. A hit must land within the
  // retention of the cluster serving it. Configuration and mapping changes
  // flush the cache, so every hit follows a fill recorded here.
  std::function<void(const AccessEvent&)> shadow() {
    auto written = std::make_shared<std::map<std::pair<std::uint64_t, unsigned>, Tick>>();
    return [this, written](const AccessEvent& e) {
      const auto slot = std::make_pair(e.outcome.set, e.outcome.way);
      if (e.retention_cycles != 0) {
        const Tick r = kClusterRetention[e.bank / kBanksPerCluster];
        if (r != e.retention_cycles) ++retention_mismatch;
        if (e.outcome.hit()) {
          ++hits_checked;
          auto it = written->find(slot);
          if (it == written->end() || e.access.tick - it->second > r) ++stale_hits;
        }
      }
      if (!e.outcome.hit() || e.access.kind == AccessKind::Write) (*written)[slot] = e.access.tick;
    };
  }
};

Watch watch;

RunResult watched_halls(const Trace& t, RunOptions o) {
  o.observer = watch.shadow();
  auto r = run_halls(t, ParamTable::shipped(), o);
  watch.run(r);
  return r;
}

// ---------------------------------------------------------------------------
// Shipped workload suite

struct SuiteRun {
  std::string name;
  fs::path path;
  RunConfig rc;
  Trace trace;
  std::vector<RunResult> runs;

  const RunResult& system(const std::string& n) const {
    for (const auto& r : runs) {
      if (r.system == n) return r;
    }
    throw Error("no run for " + n);
  }
};

std::vector<fs::path> suite_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(HALLS_SOURCE_DIR) / "data" / "workloads")) {
    if (e.path().extension() == ".cfg") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RunConfig suite_config(const fs::path& p) {
  auto kv = load_key_values(p.string());
  kv["workload"] = p.stem().string();
  return build_run_config(kv);
}

std::vector<SuiteRun> run_suite() {
  std::vector<SuiteRun> out;
  for (const auto& p : suite_files()) {
    SuiteRun s;
    s.name = p.stem().string();
    s.path = p;
    s.rc = suite_config(p);
    s.trace = load_workload(s.rc);
    for (const auto& sys : s.rc.systems) {
      RunOptions o = s.rc.run;
      o.observer = watch.shadow();
      s.runs.push_back(run_system(sys, s.trace, ParamTable::shipped(), o));
      watch.run(s.runs.back());
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1: cache engine against a map-based model

class MapCache {
 public:
  MapCache(std::uint64_t line, std::uint64_t sets, unsigned ways, std::uint64_t seed)
      : line_(line), sets_(sets), ways_(ways), state_(seed), slots_(sets) {
    for (auto& s : slots_) s.resize(ways);
  }

  struct Result {
    bool hit;
    unsigned way;
    std::optional<Address> writeback;
  };

  Result access(Address a, bool write) {
    const std::uint64_t block = a / line_;
    const std::uint64_t set = block % sets_;
    const std::uint64_t tag = block / sets_;
    auto& where = index_[set];
    if (auto it = where.find(tag); it != where.end()) {
      if (write) slots_[set][it->second].dirty = true;
      return {true, it->second, std::nullopt};
    }
    unsigned w = 0;
    while (w < ways_ && slots_[set][w].valid) ++w;
    if (w == ways_) w = static_cast<unsigned>(rand() % ways_);
    Result r{false, w, std::nullopt};
    auto& s = slots_[set][w];
    if (s.valid) {
      where.erase(s.tag);
      if (s.dirty) r.writeback = (s.tag * sets_ + set) * line_;
    }
    s = {true, write, tag};
    where[tag] = w;
    return r;
  }

 private:
  struct Slot {
    bool valid = false;
    bool dirty = false;
    std::uint64_t tag = 0;
  };

  std::uint64_t rand() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 2685821657736338717ull;
  }

  std::uint64_t line_, sets_;
  unsigned ways_;
  std::uint64_t state_;
  std::vector<std::vector<Slot>> slots_;
  std::map<std::uint64_t, std::map<std::uint64_t, unsigned>> index_;
};

// Random trace with a hot region, a cold region and random tick gaps.
Trace random_trace(std::uint64_t seed, std::size_t n, std::uint64_t span, Tick max_gap) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> hot(0, span / 8);
  std::uniform_int_distribution<std::uint64_t> cold(0, span);
  std::uniform_int_distribution<Tick> gap(1, max_gap);
  std::bernoulli_distribution is_hot(0.7), is_write(0.3);
  Trace t;
  Tick tick = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tick += gap(rng);
    const Address a = (is_hot(rng) ? hot(rng) : cold(rng)) & ~Address{15};
    t.push_back({tick, static_cast<std::uint16_t>(rng() % 4),
                 is_write(rng) ? AccessKind::Write : AccessKind::Read, a, tick});
  }
  return t;
}

Outcome criterion_engine() {
  struct Geo {
    std::uint64_t line, sets;
    unsigned ways;
  };
  const Geo geos[] = {{16, 4, 1}, {32, 8, 2}, {64, 16, 4}, {16, 32, 8}, {64, 2, 16}, {32, 64, 16}};
  const auto t0 = Clock::now();
  std::uint64_t accesses = 0, mismatches = 0, runs = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::mt19937_64 pick(seed * 7919);
    const std::size_t n = 1000 + pick() % 9001;
    for (const auto& g : geos) {
      const std::uint64_t size = g.line * g.sets * g.ways;
      const Trace t = random_trace(seed, n, size * (2 + seed % 5), 50);
      SetAssocCache lib(CacheGeometry{g.line, g.sets, g.ways}, seed);
      MapCache ref(g.line, g.sets, g.ways, seed);
      for (const auto& a : t) {
        const auto o = lib.lookup(a.address, a.kind, a.tick, a.core_id);
        const auto r = ref.access(a.address, a.kind == AccessKind::Write);
        if (o.hit() != r.hit || o.way != r.way || o.victim_writeback != r.writeback) ++mismatches;
      }
      accesses += t.size();
      ++runs;
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < kEngineSeconds,
          fmt("%llu traces x geometries, %llu accesses, %llu mismatches, %.2fs (limit %.0fs)",
              (unsigned long long)runs, (unsigned long long)accesses,
              (unsigned long long)mismatches, secs, kEngineSeconds)};
}

// ---------------------------------------------------------------------------
// 2: expiration counter bounds

Outcome criterion_expiry_bounds() {
  std::mt19937_64 rng(2024);
  std::uint64_t bad = 0;
  const unsigned n = 1000;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned cls = static_cast<unsigned>(rng() % kClusterCount);
    const Tick r = kClusterRetention[cls];
    const Tick t = rng() % (Tick{1} << 40);

    SetAssocCache cache(CacheGeometry{64, 1, 1}, 1);
    ExpirationTracker tracker(2.0);
    cache.lookup(0, AccessKind::Write, t);
    tracker.on_write(cache.block(0, 0), 0, 0, retention_of_cluster(cls));
    // Find the expiry tick by bisection over advance_time on copies.
    Tick lo = t, hi = t + 2 * r;
    {
      auto c = cache;
      auto tr = tracker;
      if (tr.advance_time(c, t, hi).size() != 1) {
        ++bad;
        continue;
      }
    }
    while (hi - lo > 1) {
      const Tick mid = lo + (hi - lo) / 2;
      auto c = cache;
      auto tr = tracker;
      if (tr.advance_time(c, t, mid).empty()) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const Tick expiry = hi;
    if (expiry < t + 14 * r / 16 || expiry > t + r) ++bad;
  }
  return {bad == 0, fmt("%u random (tick, class) pairs, %llu outside [t+14r/16, t+r]", n,
                        (unsigned long long)bad)};
}

// ---------------------------------------------------------------------------
// 4: configuration tuning against a hand-written halving search

using Sampler = std::function<std::optional<double>(const CacheConfig&)>;

struct SearchTrace {
  CacheConfig best;
  std::vector<std::pair<std::string, double>> samples;
};

SearchTrace halving_search(const Sampler& sample) {
  SearchTrace out;
  CacheConfig best{1024 * 1024, 64, 16};
  auto l0 = sample(best);
  if (!l0) return {best, {}};
  out.samples.push_back({to_string(best), *l0});
  double best_lat = *l0;
  auto walk = [&](std::uint64_t CacheConfig::*field, std::uint64_t floor) {
    for (std::uint64_t v = best.*field / 2; v >= floor; v /= 2) {
      CacheConfig c = best;
      c.*field = v;
      const auto l = sample(c);
      if (!l) return false;
      out.samples.push_back({to_string(c), *l});
      if (*l < best_lat) {
        best_lat = *l;
        best = c;
      } else {
        break;
      }
    }
    return true;
  };
  if (walk(&CacheConfig::size_bytes, 128 * 1024) && walk(&CacheConfig::line_bytes, 16)) {
    walk(&CacheConfig::ways, 1);
  }
  out.best = best;
  return out;
}

Outcome criterion_config_tuner(const std::vector<SuiteRun>& suite) {
  unsigned agree = 0, over = 0, landscapes = 0;
  std::string first_fault;
  auto compare = [&](const std::string& name, const std::vector<ConfigSample>& lib_samples,
                     const CacheConfig& lib_best, const SearchTrace& ref) {
    ++landscapes;
    bool same = lib_samples.size() == ref.samples.size() && lib_best == ref.best;
    for (std::size_t i = 0; same && i < lib_samples.size(); ++i) {
      same = to_string(lib_samples[i].config) == ref.samples[i].first &&
             lib_samples[i].latency_cycles == ref.samples[i].second;
    }
    if (same) {
      ++agree;
    } else if (first_fault.empty()) {
      first_fault = " first divergence: " + name;
    }
    if (lib_samples.size() > kMaxConfigIntervals) ++over;
  };

  // Synthetic latency tables.
  for (unsigned k = 0; k < 5; ++k) {
    std::mt19937_64 rng(100 + k);
    std::map<std::string, double> table;
    for (const auto& c : DesignSpace::standard().lattice()) {
      // Mixture of a smooth bowl and noise; k shifts the bowl's centre.
      const double s = std::log2(static_cast<double>(c.size_bytes) / 131072.0);
      const double l = std::log2(static_cast<double>(c.line_bytes) / 16.0);
      const double w = std::log2(static_cast<double>(c.ways));
      table[to_string(c)] = std::pow(s - k % 4, 2) + std::pow(l - k % 3, 2) +
                            std::pow(w - (k + 1) % 5, 2) + (rng() % 1000) * 1e-3;
    }
    Sampler f = [&](const CacheConfig& c) -> std::optional<double> { return table.at(to_string(c)); };
    const auto lib = tune_configuration(f);
    compare("table" + std::to_string(k), lib.samples, lib.best, halving_search(f));
  }

  // Trace-driven landscapes: library flow against the reference search run
  // on its own session over the same trace.
  for (unsigned k = 0; k < 5; ++k) {
    WorkloadSpec w;
    for (unsigned c = 0; c < 2 + k % 3; ++c) {
      CoreStream s;
      s.footprint_bytes = (32u << (k + c) % 5) * 1024;
      s.gap_weights = {0.5 + 0.04 * k, 0.3, 0.2 - 0.04 * k};
      s.write_fraction = 0.1 + 0.15 * c;
      s.touch_bytes = 16;
      s.length = 20000;
      s.seed = 10 * k + c + 1;
      w.cores.push_back(s);
    }
    const Trace t = generate_workload(w);
    RunOptions o;
    o.interval_instructions = std::max<std::uint64_t>(1, t.back().instructions_retired / 16);
    const auto lib = watched_halls(t, o);

    Session ref_session(t, ParamTable::shipped(), Technology::halls(), o, CacheConfig::maximum(),
                        tuning_set_mapping(32, 0));
    Sampler f = [&](const CacheConfig& c) -> std::optional<double> {
      ref_session.apply(c, tuning_set_mapping(c.bank_count(), 0));
      const auto* rec = ref_session.run_interval(Phase::ConfigTuning, "");
      if (!rec || !rec->complete) return std::nullopt;
      return rec->report.access_latency_cycles;
    };
    compare("trace" + std::to_string(k), lib.tuning->config_samples, lib.tuning->best_config,
            halving_search(f));
  }

  unsigned suite_max = 0;
  for (const auto& s : suite) {
    suite_max = std::max(suite_max, s.system("HALLS").tuning->config_intervals);
  }
  const bool pass = agree == landscapes && over == 0 && suite_max <= kMaxSuiteConfigIntervals;
  return {pass, fmt("%u/%u landscapes match the reference search, %u over %u samples; shipped "
                    "suite max %u config intervals (limit %u)%s",
                    agree, landscapes, over, kMaxConfigIntervals, suite_max,
                    kMaxSuiteConfigIntervals, first_fault.c_str())};
}

// ---------------------------------------------------------------------------
// 5: retention tuning against the exhaustive mapping oracle

// Cuts a generated trace where its first core runs out, so every core stays
// active for the whole trace.
Trace stationary(const Trace& t, unsigned cores) {
  std::vector<Tick> last(cores, 0);
  for (const auto& a : t) last[a.core_id] = a.tick;
  const Tick horizon = *std::min_element(last.begin(), last.end());
  Trace out;
  for (const auto& a : t) {
    if (a.tick <= horizon) out.push_back(a);
  }
  return out;
}

Outcome criterion_retention_regret() {
  const std::uint64_t lines[] = {64, 32, 16};
  const std::uint64_t ways[] = {16, 8, 4, 2, 1};
  double worst = 0.0;
  unsigned rotation_faults = 0, workloads = 0;
  std::string worst_name;
  for (unsigned k = 0; k < 10; ++k) {
    std::mt19937_64 rng(500 + k);
    WorkloadSpec w;
    const unsigned cores = 2 + k % 3;
    for (unsigned c = 0; c < cores; ++c) {
      CoreStream s;
      s.footprint_bytes = (8 + rng() % 24) * 1024;
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const double a = u(rng), b = u(rng), c3 = u(rng) * 0.5;
      s.gap_weights = {a / (a + b + c3), b / (a + b + c3), 0.0};
      s.gap_weights[2] = 1.0 - s.gap_weights[0] - s.gap_weights[1];
      s.write_fraction = u(rng) * 0.6;
      s.touch_bytes = 16;
      s.length = 6000;
      s.seed = rng();
      w.cores.push_back(s);
    }
    const Trace t = stationary(generate_workload(w), cores);
    RunOptions o;
    o.interval_instructions = std::max<std::uint64_t>(1, t.back().instructions_retired / 10);
    o.fixed_config = CacheConfig{128 * 1024, lines[k % 3], ways[k % 5]};
    const auto tuned = watched_halls(t, o);
    ++workloads;

    // Every (vbank, cluster) pair sampled exactly once across the four sets.
    std::map<std::pair<std::size_t, unsigned>, unsigned> seen;
    for (const auto& iv : tuned.intervals) {
      if (iv.phase != Phase::RetentionTuning) continue;
      for (std::size_t v = 0; v < iv.report.mapping.size(); ++v) {
        ++seen[{v, iv.report.mapping[v].cluster}];
      }
    }
    bool rotation_ok = seen.size() == 4 * 4;
    for (const auto& [key, n] : seen) rotation_ok = rotation_ok && n == 1;
    if (!rotation_ok) ++rotation_faults;

    RunConfig rc;
    rc.run = o;
    rc.run.observer = nullptr;
    rc.oracle_cap = 256;
    const auto ranked = run_oracle(rc, OracleScope::Retention, t, ParamTable::shipped());
    const auto mine = evaluate_fixed(Technology::halls(), t, ParamTable::shipped(), rc.run,
                                             *o.fixed_config, tuned.final_mapping);
    watch.run(mine);
    const double ratio = run_edp(mine) / ranked.front().edp;
    if (ratio > worst) {
      worst = ratio;
      worst_name = fmt("workload %u (%s, tuner %s vs oracle %s)", k,
                       to_string(*o.fixed_config).c_str(),
                       mapping_clusters(tuned.final_mapping).c_str(),
                       ranked.front().label.c_str());
    }
  }
  return {worst <= kRegretBound && rotation_faults == 0,
          fmt("%u workloads on 4-vbank configs, worst tuner/oracle EDP %.4f (limit %.2f) at %s; "
              "%u rotation faults",
              workloads, worst, kRegretBound, worst_name.c_str(), rotation_faults)};
}

// ---------------------------------------------------------------------------
// 6: DRS refresh share falls with retention

Outcome criterion_refresh_trend(const std::vector<SuiteRun>& suite) {
  const auto t0 = Clock::now();
  const SuiteRun* ll = nullptr;
  for (const auto& s : suite) {
    if (s.name == "long_lifetime") ll = &s;
  }
  if (!ll) return {false, "long_lifetime workload missing"};
  std::vector<double> pct;
  for (auto r : kRetentionClasses) {
    const auto run = run_baseline(BaselineKind::drs(r), ll->trace, ParamTable::shipped(), ll->rc.run);
    watch.run(run);
    pct.push_back(refresh_energy_percent(run.total.ledger));
  }
  const double secs = seconds_since(t0);
  bool decreasing = true;
  for (std::size_t i = 1; i < pct.size(); ++i) decreasing = decreasing && pct[i] < pct[i - 1];
  const bool ratio = pct[0] >= kRefreshTrendRatio * pct[3];
  return {decreasing && ratio && secs < kTrendSeconds,
          fmt("refresh %% 100us %.4f, 1ms %.4f, 10ms %.4f, 100ms %.4f; ratio %.1f (min %.0f); %.2fs",
              pct[0], pct[1], pct[2], pct[3], pct[3] > 0 ? pct[0] / pct[3] : INFINITY,
              kRefreshTrendRatio, secs)};
}

// ---------------------------------------------------------------------------
// 7: HALLS beats both baselines on a short-lifetime mix

Outcome criterion_short_mix(const std::vector<SuiteRun>& suite) {
  const SuiteRun* ms = nullptr;
  for (const auto& s : suite) {
    if (s.name == "mix_short") ms = &s;
  }
  if (!ms || !ms->rc.workload) return {false, "mix_short workload missing"};

  // Share of blocks drawn from the short band, from the workload description.
  double blocks = 0.0, short_blocks = 0.0;
  for (const auto& c : ms->rc.workload->cores) {
    const double n = static_cast<double>(c.footprint_bytes / 64);
    const double sum = c.gap_weights[0] + c.gap_weights[1] + c.gap_weights[2];
    blocks += n;
    short_blocks += n * c.gap_weights[0] / sum;
  }
  const double spec_share = short_blocks / blocks;

  // Measured: blocks whose every reuse gap between touches stays under 1 ms.
  std::map<Address, std::pair<Tick, Tick>> seen;  // block -> (last tick, max gap)
  for (const auto& a : ms->trace) {
    auto [it, fresh] = seen.emplace(a.address / 64, std::make_pair(a.tick, Tick{0}));
    if (!fresh) {
      it->second.second = std::max(it->second.second, a.tick - it->second.first);
      it->second.first = a.tick;
    }
  }
  std::size_t under = 0, reused = 0;
  for (const auto& [b, v] : seen) {
    if (v.second == 0) continue;
    ++reused;
    if (v.second < kOneMs) ++under;
  }
  const double measured = reused ? static_cast<double>(under) / reused : 0.0;

  const double h = ms->system("HALLS").total.ledger.total();
  const double d = ms->system("DRS-10ms").total.ledger.total();
  const double s = ms->system("SRAM").total.ledger.total();
  return {spec_share >= kShortLivedShare && measured >= kShortLivedShare && h < d && h < s,
          fmt("sub-1ms blocks %.1f%% by description, %.1f%% measured; energy uJ HALLS %.1f, "
              "DRS-10ms %.1f, SRAM %.1f",
              100 * spec_share, 100 * measured, h / 1e3, d / 1e3, s / 1e3)};
}

// ---------------------------------------------------------------------------
// 10: byte-identical reruns

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_determinism() {
  const fs::path root = fs::temp_directory_path() / ("halls_acceptance_" + std::to_string(::getpid()));
  unsigned identical = 0, total = 0;
  std::string fault;
  for (const auto& p : suite_files()) {
    std::string files[2][4];
    for (int rep = 0; rep < 2; ++rep) {
      auto rc = suite_config(p);
      rc.out_dir = (root / (p.stem().string() + "_" + std::to_string(rep))).string();
      std::ostringstream out, err;
      if (cmd_run(rc, out, err) != 0) fault = " run failed: " + err.str();
      const char* names[] = {"summary.csv", "tuning_log.csv", "mapping.csv", "per_bank.csv"};
      for (int f = 0; f < 4; ++f) files[rep][f] = slurp(fs::path(rc.out_dir) / names[f]);
    }
    ++total;
    bool same = !files[0][0].empty();
    for (int f = 0; f < 4; ++f) same = same && files[0][f] == files[1][f];
    if (same) ++identical;
  }
  fs::remove_all(root);
  return {identical == total && total > 0,
          fmt("%u/%u shipped workloads produced identical output files on rerun%s", identical,
              total, fault.c_str())};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome>> results(10);
  const auto t0 = Clock::now();

  results[0] = {"cache engine matches map model", criterion_engine()};
  results[1] = {"expiration within retention bounds", criterion_expiry_bounds()};

  const auto suite = run_suite();
  // Extra volatile runs on random traces for the shadow check.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Trace t = random_trace(seed, 10000, 256 * 1024 * (1 + seed % 4), 20000 + 5000 * (seed % 8));
    RunOptions o;
    o.interval_instructions = t.back().instructions_retired / 16 + 1;
    watched_halls(t, o);
  }

  results[3] = {"configuration tuner matches reference search", criterion_config_tuner(suite)};
  results[4] = {"retention tuner within oracle EDP bound", criterion_retention_regret()};
  results[5] = {"DRS refresh share falls with retention", criterion_refresh_trend(suite)};
  results[6] = {"HALLS beats SRAM and DRS on short-lived mix", criterion_short_mix(suite)};
  results[9] = {"reruns are byte-identical", criterion_determinism()};

  results[2] = {"no hit on an expired block",
                {watch.stale_hits == 0 && watch.retention_mismatch == 0 && watch.hits_checked > 0,
                 fmt("%llu volatile hits checked, %llu stale, %llu retention mismatches",
                     (unsigned long long)watch.hits_checked, (unsigned long long)watch.stale_hits,
                     (unsigned long long)watch.retention_mismatch)}};
  results[7] = {"energy ledgers conserve",
                {watch.worst_ledger <= kLedgerRelTol && watch.intervals_checked > 0,
                 fmt("%llu intervals over %llu runs, worst relative error %.3g (limit %.0g)",
                     (unsigned long long)watch.intervals_checked,
                     (unsigned long long)watch.runs_checked, watch.worst_ledger, kLedgerRelTol)}};
  std::string faults;
  for (const auto& f : watch.mapping_faults) faults += "; " + f;
  results[8] = {"HALLS mappings are legal",
                {watch.mapping_faults.empty() && watch.mappings_checked > 0,
                 fmt("%llu mappings checked%s", (unsigned long long)watch.mappings_checked,
                     faults.c_str())}};

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, o] = results[i];
    std::printf("%s C%zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, name.c_str(), o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(results.size()) - failed,
              results.size(), seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
