#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <map>

#include "halls/trace.hpp"

using namespace halls;

TEST(TraceParse, ReadsFieldsAndSkipsComments) {
  const auto t = parse_trace(
      "# tick,core,kind,address,instructions\n"
      "0,0,R,0x40,0\n"
      "\n"
      "5,3,W,0xDEADBEEF,17\n");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1].tick, 5u);
  EXPECT_EQ(t[1].core_id, 3u);
  EXPECT_EQ(t[1].kind, AccessKind::Write);
  EXPECT_EQ(t[1].address, 0xDEADBEEFull);
  EXPECT_EQ(t[1].instructions_retired, 17u);
}

TEST(TraceParse, ReportsLineOfTickRegression) {
  try {
    parse_trace("10,0,R,0x0,0\n# note\n9,0,R,0x0,1\n");
    FAIL() << "expected TraceError";
  } catch (const TraceError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(TraceParse, RejectsMalformedLines) {
  EXPECT_THROW(parse_trace("0,0,X,0x0,0\n"), TraceError);
  EXPECT_THROW(parse_trace("0,0,R,0x0\n"), TraceError);
  EXPECT_THROW(parse_trace("0,0,R,zz,0\n"), TraceError);
  EXPECT_THROW(parse_trace("1,0,R,0x0,5\n2,0,R,0x0,4\n"), TraceError);
}

TEST(TraceIo, RoundTripsPlainAndGzip) {
  Trace t;
  for (unsigned i = 0; i < 100; ++i) {
    t.push_back({i * 3, i % 4, i % 3 ? AccessKind::Read : AccessKind::Write,
                 0x1000ull * i + 16, i * 7});
  }
  const auto dir = std::filesystem::temp_directory_path() / "halls_trace_io";
  std::filesystem::create_directories(dir);
  for (const char* name : {"t.csv", "t.csv.gz"}) {
    const auto p = (dir / name).string();
    write_trace(t, p);
    EXPECT_EQ(read_trace(p), t) << name;
  }
  EXPECT_EQ(parse_trace(format_trace(t)), t);
}

TEST(Rational, ScalesWithoutOverflow) {
  EXPECT_EQ((Rational{1, 2}.scale_floor(7)), 3u);
  EXPECT_EQ((Rational{3, 1}.scale_floor(5)), 15u);
  EXPECT_EQ((Rational{7, 3}.scale_floor(std::uint64_t{1} << 62)),
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 62) * 7 / 3));
  EXPECT_EQ(parse_rational("1/2").den, 2u);
  EXPECT_THROW(parse_rational("1/0"), Error);
}

namespace {

WorkloadSpec two_cores() {
  WorkloadSpec w;
  CoreStream a;
  a.footprint_bytes = 16 * 1024;
  a.write_fraction = 0.25;
  a.gap_weights = {0.5, 0.5, 0.0};
  a.length = 5000;
  a.seed = 9;
  CoreStream b = a;
  b.footprint_bytes = 8 * 1024;
  b.write_fraction = 0.6;
  b.instruction_rate = {1, 2};
  b.touch_bytes = 32;
  b.length = 3001;
  w.cores = {a, b};
  return w;
}

}  // namespace

TEST(Generator, ExactLengthsAndWriteCounts) {
  const auto w = two_cores();
  const auto t = generate_workload(w);
  std::map<unsigned, std::uint64_t> len, writes;
  for (const auto& a : t) {
    ++len[a.core_id];
    writes[a.core_id] += a.kind == AccessKind::Write;
  }
  EXPECT_EQ(len[0], 5000u);
  EXPECT_EQ(len[1], 3001u);
  EXPECT_EQ(writes[0], 1250u);  // round(0.25 * 5000)
  EXPECT_EQ(writes[1], 1801u);  // round(0.6 * 3001) = round(1800.6)
}

TEST(Generator, DeterministicPerSeed) {
  auto w = two_cores();
  EXPECT_EQ(generate_workload(w), generate_workload(w));
  w.cores[0].seed = 10;
  EXPECT_NE(generate_workload(w), generate_workload(two_cores()));
}

TEST(Generator, MergedOrderAndInstructionCounts) {
  const auto w = two_cores();
  const auto t = generate_workload(w);
  validate_trace(t, 2);
  for (std::size_t i = 1; i < t.size(); ++i) {
    ASSERT_TRUE(t[i - 1].tick < t[i].tick ||
                (t[i - 1].tick == t[i].tick && t[i - 1].core_id <= t[i].core_id));
  }
  for (const auto& a : t) {
    ASSERT_EQ(a.instructions_retired, a.tick + a.tick / 2);  // ipc 1 + ipc 1/2
  }
}

TEST(Generator, AddressesStayInCoreRegions) {
  const auto t = generate_workload(two_cores());
  for (const auto& a : t) {
    const Address base = kCoreAddressStride * a.core_id;
    ASSERT_GE(a.address, base);
    ASSERT_LT(a.address, base + (a.core_id == 0 ? 16 * 1024 : 8 * 1024));
    ASSERT_EQ(a.address % 16, 0u);
  }
}

TEST(Generator, ReuseGapsFallInsideTheirBand) {
  WorkloadSpec w;
  CoreStream s;
  s.footprint_bytes = 4096;  // 64 blocks
  s.gap_weights = {0.25, 0.75, 0.0};
  s.touch_bytes = 16;
  s.length = 4000;
  w.cores = {s};
  const auto t = generate_workload(w);
  // 2 cycles per ns at 0.5ns: Short gaps in [2000, 200000), Medium in [2e6, 2e7).
  std::map<Address, Tick> last;
  std::map<Address, int> band;
  for (const auto& a : t) {
    auto it = last.find(a.address);
    if (it != last.end()) {
      const Tick gap = a.tick - it->second;
      const int b = gap < 200000 ? 0 : 1;
      if (b == 0) {
        EXPECT_GE(gap, 2000u);
      } else {
        EXPECT_GE(gap, 2000000u);
        EXPECT_LT(gap, 20000000u);
      }
      auto [bit, fresh] = band.emplace(a.address, b);
      EXPECT_EQ(bit->second, b) << "block changed band";
    }
    last[a.address] = a.tick;
  }
  int shorts = 0;
  for (auto& [addr, b] : band) shorts += b == 0;
  EXPECT_EQ(shorts, 16);  // exactly 0.25 * 64 short blocks
}

TEST(Generator, TouchIssuesConsecutiveSixteenByteAccesses) {
  WorkloadSpec w;
  CoreStream s;
  s.footprint_bytes = 1024;
  s.touch_bytes = 64;
  s.length = 400;
  w.cores = {s};
  const auto t = generate_workload(w);
  std::map<Address, std::vector<Tick>> by_block;
  for (const auto& a : t) by_block[a.address & ~Address{63}].push_back(a.tick);
  for (std::size_t i = 0; i + 3 < t.size(); ++i) {
    if (t[i].address % 64 == 0 && t[i + 3].address == t[i].address + 48) {
      EXPECT_EQ(t[i + 3].tick, t[i].tick + 3);
    }
  }
  EXPECT_EQ(t.size(), 400u);
}

TEST(Generator, ValidationNamesTheField) {
  auto w = two_cores();
  w.cores[1].write_fraction = 1.5;
  try {
    generate_workload(w);
    FAIL();
  } catch (const InvalidSpec& e) {
    EXPECT_EQ(e.field(), "cores[1].write_fraction");
  }
  w = two_cores();
  w.cores[0].gap_weights = {0.5, 0.2, 0.2};
  EXPECT_THROW(generate_workload(w), InvalidSpec);
  w = two_cores();
  w.cores[0].touch_bytes = 48;
  EXPECT_THROW(generate_workload(w), InvalidSpec);
  EXPECT_THROW(generate_workload(WorkloadSpec{}), InvalidSpec);
}
