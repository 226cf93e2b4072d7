#include <gtest/gtest.h>

#include "halls/cache.hpp"

using namespace halls;

TEST(CacheConfig, FormatsAndParses) {
  EXPECT_EQ(to_string(CacheConfig{128 * 1024, 64, 2}), "128K-2W-64B");
  EXPECT_EQ(to_string(CacheConfig::maximum()), "1M-16W-64B");
  EXPECT_EQ(parse_config("512K-8W-32B"), (CacheConfig{512 * 1024, 32, 8}));
  EXPECT_THROW(parse_config("2M-16W-64B"), Error);
  EXPECT_THROW(parse_config("128K-3W-64B"), Error);
  EXPECT_THROW(parse_config("128K64B"), Error);
}

TEST(CacheConfig, LatticeHasSixtyPoints) {
  const auto l = DesignSpace::standard().lattice();
  EXPECT_EQ(l.size(), 60u);
  EXPECT_EQ(l.front(), CacheConfig::maximum());
  for (const auto& c : l) EXPECT_TRUE(c.valid());
}

TEST(SetAssocCache, HitAfterFillAndDirtyTracking) {
  SetAssocCache c({64, 4, 2}, 1);
  auto o = c.lookup(0x100, AccessKind::Read, 1);
  EXPECT_EQ(o.kind, OutcomeKind::MissClean);
  EXPECT_FALSE(c.block(o.set, o.way).dirty);
  o = c.lookup(0x13F, AccessKind::Write, 2);  // same 64B line
  EXPECT_TRUE(o.hit());
  EXPECT_TRUE(c.block(o.set, o.way).dirty);
  EXPECT_EQ(c.block(o.set, o.way).write_tick, 2u);
}

TEST(SetAssocCache, FillsLowestInvalidWayThenEvicts) {
  SetAssocCache c({64, 1, 2}, 3);
  EXPECT_EQ(c.lookup(0 * 64, AccessKind::Write, 0).way, 0u);
  EXPECT_EQ(c.lookup(1 * 64, AccessKind::Read, 1).way, 1u);
  const auto o = c.lookup(2 * 64, AccessKind::Read, 2);
  ASSERT_TRUE(o.evicted.has_value());
  if (o.way == 0) {
    EXPECT_EQ(o.kind, OutcomeKind::MissDirtyEviction);
    EXPECT_EQ(*o.victim_writeback, 0u);
  } else {
    EXPECT_EQ(o.kind, OutcomeKind::MissClean);
    EXPECT_FALSE(o.victim_writeback.has_value());
  }
  EXPECT_EQ(c.valid_count(), 2u);
}

TEST(SetAssocCache, SameSeedSameVictims) {
  SetAssocCache a({64, 2, 4}, 77), b({64, 2, 4}, 77);
  for (Address x = 0; x < 200; ++x) {
    const auto oa = a.lookup(x * 128, AccessKind::Read, x);
    const auto ob = b.lookup(x * 128, AccessKind::Read, x);
    ASSERT_EQ(oa.way, ob.way);
  }
}

TEST(SetAssocCache, FlushReturnsDirtyLines) {
  SetAssocCache c({32, 8, 2}, 1);
  c.lookup(0x00, AccessKind::Write, 0);
  c.lookup(0x20, AccessKind::Read, 0);
  c.lookup(0x40, AccessKind::Write, 0);
  auto dirty = c.flush();
  std::sort(dirty.begin(), dirty.end());
  EXPECT_EQ(dirty, (std::vector<Address>{0x00, 0x40}));
  EXPECT_EQ(c.valid_count(), 0u);
}

TEST(Reconfigure, IdentityIsFree) {
  SetAssocCache c(CacheConfig::maximum().geometry(), 1);
  c.lookup(0x40, AccessKind::Write, 0);
  const auto r = reconfigure(c, CacheConfig::maximum(), CacheConfig::maximum());
  EXPECT_EQ(r.cost, ReconfigCost{});
  EXPECT_EQ(c.valid_count(), 1u);
}

TEST(Reconfigure, ChangeFlushesAndCosts) {
  SetAssocCache c(CacheConfig::maximum().geometry(), 1);
  c.lookup(0x40, AccessKind::Write, 0);
  c.lookup(0x80, AccessKind::Read, 0);
  const CacheConfig small{128 * 1024, 64, 2};
  const auto r = reconfigure(c, CacheConfig::maximum(), small);
  EXPECT_EQ(r.cost.latency_cycles, 114688u);
  EXPECT_DOUBLE_EQ(r.cost.energy_nJ, 14844.0);
  EXPECT_EQ(r.writebacks, std::vector<Address>{0x40});
  EXPECT_EQ(c.geometry(), small.geometry());
  EXPECT_EQ(c.valid_count(), 0u);
}
