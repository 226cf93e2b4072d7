#include <gtest/gtest.h>

#include <random>

#include "halls/retention.hpp"

using namespace halls;

TEST(Counter, PeriodsAtTwoGigahertz) {
  EXPECT_EQ(retention_cycles(RetentionClass::R100us, 2.0), 200000u);
  EXPECT_EQ(retention_cycles(RetentionClass::R100ms, 2.0), 200000000u);
  EXPECT_EQ(counter_period(200000), 12500u);
}

TEST(Counter, ExpiresAtSixteenthBoundary) {
  const Tick p = 12500;
  EXPECT_EQ(expiry_tick(0, p), 200000u);
  EXPECT_EQ(expiry_tick(12499, p), 200000u);
  EXPECT_EQ(expiry_tick(12500, p), 212500u);
  EXPECT_EQ(counter_state(0, 12499, p), 0u);
  EXPECT_EQ(counter_state(0, 12500, p), 1u);
  EXPECT_EQ(counter_state(100, 10 * p, p), 10u);
  EXPECT_EQ(counter_state(0, 1000 * p, p), 15u);
}

TEST(Counter, ResidencyBoundsOverRandomWrites) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto r = kRetentionClasses[rng() % 4];
    const Tick ret = retention_cycles(r, 2.0);
    const Tick t = rng() % (Tick{1} << 40);
    const Tick e = expiry_tick(t, counter_period(ret));
    ASSERT_GE(e, t + ret * 14 / 16);
    ASSERT_LE(e, t + ret);
  }
}

TEST(ExpirationTracker, EvictsOnlyCurrentWrites) {
  SetAssocCache c({64, 4, 2}, 1);
  ExpirationTracker tr(2.0);
  auto o = c.lookup(0x000, AccessKind::Write, 0);
  tr.on_write(c.block(o.set, o.way), o.set, o.way, RetentionClass::R100us);
  auto o2 = c.lookup(0x040, AccessKind::Read, 100);
  tr.on_write(c.block(o2.set, o2.way), o2.set, o2.way, RetentionClass::R1ms);
  // Rewrite of the first block at 13000 moves its expiry to 212500.
  o = c.lookup(0x000, AccessKind::Write, 13000);
  tr.on_write(c.block(o.set, o.way), o.set, o.way, RetentionClass::R100us);

  EXPECT_TRUE(tr.advance_time(c, 0, 200000).empty());
  auto ex = tr.advance_time(c, 200000, 212500);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].address, 0x000u);
  EXPECT_TRUE(ex[0].was_dirty);
  EXPECT_EQ(ex[0].tick, 212500u);
  ex = tr.advance_time(c, 212500, 2000000);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].address, 0x040u);
  EXPECT_FALSE(ex[0].was_dirty);
  EXPECT_EQ(c.valid_count(), 0u);
  EXPECT_EQ(tr.pending(), 0u);
}

TEST(ExpirationTracker, MergesClassesInExpiryOrder) {
  SetAssocCache c({64, 16, 1}, 1);
  ExpirationTracker tr(2.0);
  const RetentionClass classes[] = {RetentionClass::R1ms, RetentionClass::R100us,
                                    RetentionClass::R10ms};
  for (unsigned i = 0; i < 3; ++i) {
    auto o = c.lookup(i * 64, AccessKind::Write, i);
    tr.on_write(c.block(o.set, o.way), o.set, o.way, classes[i]);
  }
  const auto ex = tr.advance_time(c, 0, 100000000);
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].address, 64u);
  EXPECT_EQ(ex[1].address, 0u);
  EXPECT_EQ(ex[2].address, 128u);
  EXPECT_THROW(tr.advance_time(c, 10, 5), Error);
}

TEST(Refresh, CountsFullPeriodsSinceLastWrite) {
  BlockMeta b;
  b.valid = true;
  b.refresh_origin = 0;
  b.refresh_settled = 0;
  EXPECT_EQ(settle_refreshes(b, 99, 100), 0u);
  EXPECT_EQ(settle_refreshes(b, 250, 100), 2u);
  EXPECT_EQ(settle_refreshes(b, 300, 100), 1u);
  EXPECT_EQ(settle_refreshes(b, 300, 100), 0u);
  EXPECT_EQ(refresh_on_write(b, 310, 100), 0u);
  EXPECT_EQ(settle_refreshes(b, 409, 100), 0u);
  EXPECT_EQ(settle_refreshes(b, 410, 100), 1u);
}

TEST(Refresh, AccountingSumsBlocksAndBuffer) {
  SetAssocCache c({64, 8, 2}, 1);
  c.lookup(0x000, AccessKind::Write, 0);
  c.lookup(0x040, AccessKind::Read, 50);
  RefreshModel m{RefreshModel::Mode::PerfectDRS};
  // 2M cycles at 2GHz = 1ms; retention 1000 cycles.
  const auto t = refresh_accounting(c, 0, 2000000, 1000, m);
  EXPECT_EQ(t.refresh_count, 2000u + 1999u);
  EXPECT_NEAR(t.refresh_energy_nJ, 3999 * 1.311, 1e-9);
  EXPECT_NEAR(t.buffer_leakage_nJ, 141425.0, 1e-6);  // 141.425 mW for 1 ms
  EXPECT_THROW(refresh_accounting(c, 0, 1, 1000, RefreshModel{}), Error);
  RefreshModel bad{RefreshModel::Mode::PerfectDRS, 0.0};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Leakage, MilliwattsToNanojoules) {
  EXPECT_NEAR(leakage_energy_nJ(3234.916, 2000000, 2.0), 3234916.0, 1e-6);
  EXPECT_DOUBLE_EQ(leakage_energy_nJ(1000.0, 0, 2.0), 0.0);
}
