#pragma once

// LLC request traces: the in-memory model, the text file format
// (`tick,core_id,{R|W},0xADDRESS,instructions_retired`, optionally gzipped)
// and a synthetic multi-core workload generator.

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "halls/types.hpp"

namespace halls {

struct MemoryAccess {
  Tick tick = 0;
  unsigned core_id = 0;
  AccessKind kind = AccessKind::Read;
  Address address = 0;
  std::uint64_t instructions_retired = 0;

  friend bool operator==(const MemoryAccess&, const MemoryAccess&) = default;
};

using Trace = std::vector<MemoryAccess>;

class TraceError : public Error {
 public:
  TraceError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline std::string read_file(const std::string& path) {
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw Error("cannot open trace '" + path + "'");
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, static_cast<std::size_t>(n));
    const bool failed = n < 0;
    gzclose(f);
    if (failed) throw Error("corrupt gzip trace '" + path + "'");
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open trace '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "wb");
    if (!f) throw Error("cannot write trace '" + path + "'");
    const bool ok = data.empty() ||
                    gzwrite(f, data.data(), static_cast<unsigned>(data.size())) ==
                        static_cast<int>(data.size());
    gzclose(f);
    if (!ok) throw Error("short write to '" + path + "'");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write trace '" + path + "'");
  out << data;
  if (!out) throw Error("short write to '" + path + "'");
}

template <typename T>
bool parse_uint(std::string_view field, T& out, int base = 10) {
  if (field.empty()) return false;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), out, base);
  return ec == std::errc() && p == field.data() + field.size();
}

}  // namespace detail

// Parses one trace line. Throws TraceError tagged with `line_no`.
inline MemoryAccess parse_trace_line(std::string_view line, std::size_t line_no) {
  std::array<std::string_view, 5> f;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto comma = line.find(',', start);
    if ((comma == std::string_view::npos) != (i == 4)) {
      throw TraceError(line_no, "expected 5 comma-separated fields");
    }
    f[i] = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    start = comma + 1;
  }
  MemoryAccess a;
  if (!detail::parse_uint(f[0], a.tick)) throw TraceError(line_no, "bad tick");
  if (!detail::parse_uint(f[1], a.core_id)) throw TraceError(line_no, "bad core id");
  if (f[2] == "R") {
    a.kind = AccessKind::Read;
  } else if (f[2] == "W") {
    a.kind = AccessKind::Write;
  } else {
    throw TraceError(line_no, "access kind must be R or W");
  }
  if (f[3].size() < 3 || f[3][0] != '0' || (f[3][1] != 'x' && f[3][1] != 'X') ||
      !detail::parse_uint(f[3].substr(2), a.address, 16)) {
    throw TraceError(line_no, "bad address (expected 0x-prefixed hex)");
  }
  if (!detail::parse_uint(f[4], a.instructions_retired)) {
    throw TraceError(line_no, "bad instruction count");
  }
  return a;
}

inline Trace parse_trace(std::string_view text) {
  Trace out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto a = parse_trace_line(line, line_no);
    if (!out.empty()) {
      if (a.tick < out.back().tick) throw TraceError(line_no, "tick regression");
      if (a.instructions_retired < out.back().instructions_retired) {
        throw TraceError(line_no, "instruction count regression");
      }
    }
    out.push_back(a);
  }
  return out;
}

inline Trace read_trace(const std::string& path) { return parse_trace(detail::read_file(path)); }

inline std::string format_trace(const Trace& trace) {
  std::string out;
  out.reserve(trace.size() * 32);
  char buf[96];
  for (const auto& a : trace) {
    const int n = std::snprintf(buf, sizeof(buf), "%llu,%u,%c,0x%llX,%llu\n",
                                static_cast<unsigned long long>(a.tick), a.core_id,
                                a.kind == AccessKind::Write ? 'W' : 'R',
                                static_cast<unsigned long long>(a.address),
                                static_cast<unsigned long long>(a.instructions_retired));
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

inline void write_trace(const Trace& trace, const std::string& path) {
  detail::write_file(path, format_trace(trace));
}

// Checks every trace invariant; `core_count` of 0 skips the core-id bound.
inline void validate_trace(const Trace& trace, unsigned core_count = 0) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& a = trace[i];
    if (i > 0 && a.tick < trace[i - 1].tick) throw TraceError(i + 1, "tick regression");
    if (i > 0 && a.instructions_retired < trace[i - 1].instructions_retired) {
      throw TraceError(i + 1, "instruction count regression");
    }
    if (core_count != 0 && a.core_id >= core_count) {
      throw TraceError(i + 1, "core id " + std::to_string(a.core_id) + " >= core count");
    }
    if (a.address >= kAddressLimit) throw TraceError(i + 1, "address beyond 48 bits");
  }
}

// ---------------------------------------------------------------------------
// Synthetic workloads

enum class GapBand : std::uint8_t { Short = 0, Medium = 1, Long = 2 };

// Same-address reuse gap bands in nanoseconds, [lo, hi).
// Short sits under the 100us class, Medium between the 1ms and 10ms classes
// and Long beyond the 100ms class.
struct GapRange {
  double lo_ns;
  double hi_ns;
};

constexpr GapRange gap_range(GapBand band) {
  switch (band) {
    case GapBand::Short: return {1e3, 1e5};
    case GapBand::Medium: return {1e6, 1e7};
    case GapBand::Long: return {1.0001e8, 2e8};
  }
  return {0, 0};
}

struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // floor(x * num / den) without overflow for x < 2^64 / num.
  std::uint64_t scale_floor(std::uint64_t x) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * num) / den);
  }
};

inline Rational parse_rational(std::string_view text) {
  Rational r;
  const auto slash = text.find('/');
  const bool ok = slash == std::string_view::npos
                      ? detail::parse_uint(text, r.num)
                      : detail::parse_uint(text.substr(0, slash), r.num) &&
                            detail::parse_uint(text.substr(slash + 1), r.den);
  if (!ok || r.den == 0) throw Error("bad rational '" + std::string(text) + "'");
  return r;
}

struct CoreStream {
  std::uint64_t footprint_bytes = 128 * 1024;
  double write_fraction = 0.2;
  std::array<double, 3> gap_weights = {1.0, 0.0, 0.0};  // Short, Medium, Long
  Rational instruction_rate{1, 1};                      // instructions per cycle
  std::uint64_t length = 10000;                         // accesses
  std::uint64_t seed = 1;
  // Each touch of a 64B block issues touch_bytes/16 accesses at 16B stride
  // on consecutive cycles.
  unsigned touch_bytes = 64;
};

struct WorkloadSpec {
  std::vector<CoreStream> cores;
};

inline constexpr std::uint64_t kWorkloadBlockBytes = 64;
inline constexpr std::uint64_t kCoreAddressStride = std::uint64_t{1} << 36;

class InvalidSpec : public Error {
 public:
  InvalidSpec(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline void validate(const WorkloadSpec& spec) {
  if (spec.cores.empty()) throw InvalidSpec("cores", "at least one core stream required");
  if (spec.cores.size() > kAddressLimit / kCoreAddressStride) {
    throw InvalidSpec("cores", "too many cores");
  }
  for (std::size_t c = 0; c < spec.cores.size(); ++c) {
    const auto& s = spec.cores[c];
    const std::string p = "cores[" + std::to_string(c) + "].";
    if (s.footprint_bytes < kWorkloadBlockBytes) {
      throw InvalidSpec(p + "footprint", "must cover at least one 64B block");
    }
    if (s.footprint_bytes > kCoreAddressStride) throw InvalidSpec(p + "footprint", "too large");
    if (!(s.write_fraction >= 0.0 && s.write_fraction <= 1.0)) {
      throw InvalidSpec(p + "write_fraction", "must lie in [0,1]");
    }
    double sum = 0.0;
    for (double w : s.gap_weights) {
      if (!(w >= 0.0)) throw InvalidSpec(p + "gap_weights", "weights must be non-negative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvalidSpec(p + "gap_weights", "weights must sum to 1");
    if (s.instruction_rate.num == 0 || s.instruction_rate.den == 0) {
      throw InvalidSpec(p + "instruction_rate", "must be positive");
    }
    if (s.touch_bytes != 16 && s.touch_bytes != 32 && s.touch_bytes != 64) {
      throw InvalidSpec(p + "touch_bytes", "must be 16, 32 or 64");
    }
  }
}

namespace detail {

// Accesses of one core with ticks but no instruction counts.
inline Trace generate_core(const CoreStream& s, unsigned core, double cycle_period_ns) {
  std::mt19937_64 rng(s.seed * 0x9E3779B97F4A7C15ull + core);
  const std::uint64_t blocks = s.footprint_bytes / kWorkloadBlockBytes;

  // Exact per-band block counts (largest remainder), then shuffled.
  std::array<std::uint64_t, 3> count{};
  std::uint64_t assigned = 0;
  std::array<double, 3> rem{};
  for (int b = 0; b < 3; ++b) {
    const double exact = s.gap_weights[b] * static_cast<double>(blocks);
    count[b] = static_cast<std::uint64_t>(std::floor(exact));
    rem[b] = exact - static_cast<double>(count[b]);
    assigned += count[b];
  }
  while (assigned < blocks) {
    const auto b = static_cast<std::size_t>(std::max_element(rem.begin(), rem.end()) - rem.begin());
    ++count[b];
    rem[b] = -1.0;
    ++assigned;
  }
  std::vector<GapBand> band(blocks);
  std::size_t k = 0;
  for (int b = 0; b < 3; ++b) {
    for (std::uint64_t i = 0; i < count[b]; ++i) band[k++] = static_cast<GapBand>(b);
  }
  std::shuffle(band.begin(), band.end(), rng);

  auto draw_gap = [&](GapBand b) {
    const auto r = gap_range(b);
    const double lo = std::ceil(r.lo_ns / cycle_period_ns);
    // Strictly below the band's upper edge.
    const double hi = std::floor(r.hi_ns / cycle_period_ns) - 1.0;
    std::uniform_int_distribution<std::uint64_t> d(static_cast<std::uint64_t>(lo),
                                                   static_cast<std::uint64_t>(std::max(lo, hi)));
    return d(rng);
  };

  using Event = std::pair<Tick, std::uint64_t>;  // (time, block)
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::uniform_int_distribution<std::uint64_t> phase(0, draw_gap(band[b]));
    events.emplace(phase(rng), b);
  }

  const unsigned per_touch = s.touch_bytes / 16;
  const Address base = kCoreAddressStride * core;
  Trace out;
  out.reserve(s.length);
  while (out.size() < s.length) {
    auto [t, b] = events.top();
    events.pop();
    for (unsigned i = 0; i < per_touch && out.size() < s.length; ++i) {
      MemoryAccess a;
      a.tick = t + i;
      a.core_id = core;
      a.address = base + b * kWorkloadBlockBytes + 16u * i;
      out.push_back(a);
    }
    events.emplace(t + draw_gap(band[b]), b);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MemoryAccess& x, const MemoryAccess& y) { return x.tick < y.tick; });

  // Exactly round(write_fraction * length) writes, placed uniformly at random.
  std::uint64_t writes_left =
      static_cast<std::uint64_t>(std::llround(s.write_fraction * static_cast<double>(out.size())));
  std::uint64_t remaining = out.size();
  for (auto& a : out) {
    std::uniform_int_distribution<std::uint64_t> d(0, remaining - 1);
    if (d(rng) < writes_left) {
      a.kind = AccessKind::Write;
      --writes_left;
    }
    --remaining;
  }
  return out;
}

}  // namespace detail

// Builds a merged multi-core trace. Per-core streams keep their order; ties
// in tick are broken by core id. The instruction count at tick t is the sum
// over cores of floor(t * ipc).
inline Trace generate_workload(const WorkloadSpec& spec, double cycle_period_ns = 0.5) {
  validate(spec);
  if (!(cycle_period_ns > 0.0)) throw InvalidSpec("cycle_period_ns", "must be positive");
  std::vector<Trace> streams;
  streams.reserve(spec.cores.size());
  std::size_t total = 0;
  for (std::size_t c = 0; c < spec.cores.size(); ++c) {
    streams.push_back(detail::generate_core(spec.cores[c], static_cast<unsigned>(c), cycle_period_ns));
    total += streams.back().size();
  }

  Trace merged;
  merged.reserve(total);
  using Head = std::tuple<Tick, unsigned, std::size_t>;  // (tick, core, index)
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heads;
  for (unsigned c = 0; c < streams.size(); ++c) {
    if (!streams[c].empty()) heads.emplace(streams[c][0].tick, c, 0);
  }
  while (!heads.empty()) {
    auto [t, c, i] = heads.top();
    heads.pop();
    merged.push_back(streams[c][i]);
    if (i + 1 < streams[c].size()) heads.emplace(streams[c][i + 1].tick, c, i + 1);
  }
  for (auto& a : merged) {
    std::uint64_t instr = 0;
    for (const auto& s : spec.cores) instr += s.instruction_rate.scale_floor(a.tick);
    a.instructions_retired = instr;
  }
  return merged;
}

}  // namespace halls
