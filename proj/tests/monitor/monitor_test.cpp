#include "atsu/monitor/monitor.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

namespace {

using namespace atsu;
using namespace atsu::monitor;
using namespace std::chrono_literals;
using csm::GbasMode;
using csm::GlsApproachStatus;

const UtcInstant T0 = from_epoch_ms(1'800'000'000'000);

csm::CompositeStatusMessage frame(std::uint32_t seq, UtcInstant ts, GbasMode mode = GbasMode::Normal,
                                  GlsApproachStatus approach = GlsApproachStatus::Available,
                                  std::optional<csm::OutageWindow> outage = std::nullopt) {
  csm::CompositeStatusMessage m;
  m.station_id = csm::StationId("LKPR");
  m.sequence = seq;
  m.timestamp = ts;
  m.mode = mode;
  m.approach = approach;
  m.outage = outage;
  return m;
}

TEST(SequenceNewer, MatchesSmallModulusOracleExhaustively) {
  // Embedding 8-bit serial numbers in the top byte preserves the sign of the
  // 32-bit difference, so the 2^8 oracle predicts the 2^32 comparison.
  for (std::uint32_t a = 0; a < 256; ++a)
    for (std::uint32_t b = 0; b < 256; ++b)
      ASSERT_EQ(sequence_newer(a << 24, b << 24), oracle::serial_newer_mod(a, b, 8)) << a << " vs " << b;
}

TEST(SequenceNewer, MatchesOracleOnRandomPairs) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100'000; ++i) {
    const std::uint32_t a = rng(), b = rng();
    ASSERT_EQ(sequence_newer(a, b), oracle::serial_newer_mod(a, b, 32));
  }
  EXPECT_TRUE(sequence_newer(0, 0xFFFFFFFFu));
  EXPECT_FALSE(sequence_newer(5, 5));
  EXPECT_FALSE(sequence_newer(0x80000000u, 0));
}

TEST(ApplyMessage, FreshStateTakesSequence) {
  Monitor mon;
  EXPECT_TRUE(mon.apply_message(frame(77, T0), T0).empty());
  EXPECT_EQ(mon.tick(T0).last_sequence, 77u);
}

TEST(ApplyMessage, OlderSequenceIgnored) {
  Monitor mon;
  mon.apply_message(frame(10, T0), T0);
  const auto before = mon.tick(T0 + 100ms);
  auto diag = mon.apply_message(frame(9, T0 + 100ms, GbasMode::Alarm, GlsApproachStatus::NotAvailable), T0 + 100ms);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag[0].kind, DiagnosticKind::OutOfOrder);
  auto after = mon.tick(T0 + 100ms);
  EXPECT_EQ(after.out_of_order, 1u);
  EXPECT_EQ(after.last_sequence, 10u);
  EXPECT_EQ(after.mode_panel, before.mode_panel);
  EXPECT_EQ(mon.last_receipt(), T0);
  // duplicate
  mon.apply_message(frame(10, T0 + 200ms), T0 + 200ms);
  EXPECT_EQ(mon.out_of_order(), 2u);
}

TEST(ApplyMessage, WraparoundAccepted) {
  Monitor mon;
  mon.apply_message(frame(0xFFFFFFFFu, T0), T0);
  auto diag = mon.apply_message(frame(0, T0 + 1s), T0 + 1s);
  EXPECT_TRUE(diag.empty());
  EXPECT_EQ(mon.tick(T0 + 1s).last_sequence, 0u);
  EXPECT_EQ(mon.out_of_order(), 0u);
}

TEST(ApplyMessage, StaleMonitorResynchronizes) {
  Monitor mon;
  mon.apply_message(frame(500, T0), T0);
  auto diag = mon.apply_message(frame(1, T0 + 10s), T0 + 10s);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag[0].kind, DiagnosticKind::SequenceResync);
  EXPECT_EQ(mon.tick(T0 + 10s).last_sequence, 1u);
  EXPECT_EQ(mon.tick(T0 + 10s).connectivity, Connectivity::Connected);
}

TEST(ApplyMessage, ClockSkewDiagnosedButApplied) {
  Monitor mon;
  auto diag = mon.apply_message(frame(1, T0 + 11s, GbasMode::Alarm, GlsApproachStatus::NotAvailable), T0);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag[0].kind, DiagnosticKind::ClockSkew);
  EXPECT_EQ(mon.tick(T0).mode_panel.color, PanelColor::Red);
  EXPECT_TRUE(mon.apply_message(frame(2, T0 + 10s), T0).empty());
}

TEST(Tick, NoMessageEverIsNoData) {
  Monitor mon;
  const auto s = mon.tick(T0);
  EXPECT_EQ(s.connectivity, Connectivity::NoData);
  EXPECT_EQ(s.mode_panel.color, PanelColor::Grey);
  EXPECT_EQ(s.approach_panel.color, PanelColor::Grey);
  EXPECT_FALSE(s.countdown);
  EXPECT_EQ(s.utc_clock, T0);
}

TEST(Tick, StalenessThreshold) {
  Monitor mon;
  mon.apply_message(frame(1, T0), T0);
  EXPECT_EQ(mon.tick(T0 + 5s).connectivity, Connectivity::Connected);
  const auto s = mon.tick(T0 + 6s);
  EXPECT_EQ(s.connectivity, Connectivity::NoData);
  EXPECT_EQ(s.mode_panel.color, PanelColor::Grey);
  EXPECT_EQ(s.approach_panel.color, PanelColor::Grey);
  EXPECT_FALSE(s.countdown);
  EXPECT_EQ(s.message_block->label, "NO DATA");
}

TEST(Tick, ConfigurableStaleness) {
  Monitor mon(MonitorConfig{2s, 10s});
  mon.apply_message(frame(1, T0), T0);
  EXPECT_EQ(mon.tick(T0 + 2s).connectivity, Connectivity::Connected);
  EXPECT_EQ(mon.tick(T0 + 2001ms).connectivity, Connectivity::NoData);
}

TEST(Tick, PredictedOutageCountdown) {
  Monitor mon;
  const csm::OutageWindow w{T0 + 120s, T0 + 300s};
  mon.apply_message(frame(1, T0, GbasMode::Normal, GlsApproachStatus::PredictedOutage, w), T0);
  const auto s = mon.tick(T0);
  ASSERT_TRUE(s.countdown);
  EXPECT_EQ(s.countdown->kind, CountdownKind::ToOutageStart);
  EXPECT_EQ(s.countdown->target, T0 + 120s);
  EXPECT_EQ(s.countdown->remaining, 120s);
  EXPECT_EQ(s.countdown->text, "00:02:00");
  EXPECT_EQ(s.approach_panel.color, PanelColor::Yellow);
  EXPECT_EQ(s.outage, w);
}

TEST(Tick, ExpiredCountdownFreezesAtZero) {
  Monitor mon;
  const auto now = T0 + 121s;
  mon.apply_message(frame(1, T0 + 119s, GbasMode::Normal, GlsApproachStatus::PredictedOutage,
                          csm::OutageWindow{T0 + 120s, T0 + 300s}),
                    T0 + 119s);
  const auto s = mon.tick(now);
  ASSERT_TRUE(s.countdown);
  EXPECT_EQ(s.countdown->remaining, 0s);
  EXPECT_EQ(s.countdown->text, "00:00:00");
}

TEST(Tick, ServiceReturnCountdown) {
  Monitor mon;
  mon.apply_message(frame(1, T0, GbasMode::Normal, GlsApproachStatus::NotAvailable,
                          csm::OutageWindow{T0 - 10s, T0 + 180s}),
                    T0);
  const auto s = mon.tick(T0 + 500ms);
  ASSERT_TRUE(s.countdown);
  EXPECT_EQ(s.countdown->kind, CountdownKind::ToServiceReturn);
  EXPECT_EQ(s.countdown->remaining, 179s);
  EXPECT_EQ(s.mode_panel.color, PanelColor::Green);
  EXPECT_EQ(s.approach_panel.color, PanelColor::Red);
}

TEST(Tick, NotAvailableWithoutWindowHasNoCountdown) {
  Monitor mon;
  mon.apply_message(frame(1, T0, GbasMode::Alarm, GlsApproachStatus::NotAvailable), T0);
  EXPECT_FALSE(mon.tick(T0).countdown);
}

TEST(Tick, ActiveAlertsSortedWithDescriptions) {
  Monitor mon;
  auto m = frame(1, T0);
  m.alerts = csm::AlertSet{35, 2, 14};
  m.alarms = csm::AlarmSet{6, 1};
  mon.apply_message(m, T0);
  const auto s = mon.tick(T0);
  ASSERT_EQ(s.active_alerts.size(), 3u);
  EXPECT_EQ(s.active_alerts[0].id, 2);
  EXPECT_EQ(s.active_alerts[1].id, 14);
  EXPECT_EQ(s.active_alerts[2].id, 35);
  EXPECT_EQ(s.active_alerts[2].description, Catalog::builtin().lookup(CatalogKind::Alert, 35));
  ASSERT_EQ(s.active_alarms.size(), 2u);
  EXPECT_EQ(s.active_alarms[0].code, "AL-01");
}

TEST(TickProperty, CountdownNonIncreasingAndHitsZeroAtTarget) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lead = Millis{static_cast<std::int64_t>(rng() % 600'000) + 1};
    Monitor mon(MonitorConfig{std::chrono::hours{24}, std::chrono::hours{24}});
    const csm::OutageWindow w{T0 + lead, T0 + lead + 60s};
    mon.apply_message(frame(1, T0, GbasMode::Normal, GlsApproachStatus::PredictedOutage, w), T0);

    auto now = T0;
    auto prev = std::chrono::seconds::max();
    while (now < w.start + 5s) {
      const auto c = mon.tick(now).countdown;
      ASSERT_TRUE(c);
      ASSERT_LE(c->remaining, prev);
      ASSERT_EQ(c->remaining.count() == 0, now > w.start - 1s) << "lead " << lead.count();
      prev = c->remaining;
      now += Millis{static_cast<std::int64_t>(rng() % 3000)};
    }
  }
}

TEST(TickProperty, WholeSecondClockReachesZeroExactlyAtTarget) {
  Monitor mon;
  mon.apply_message(frame(1, T0, GbasMode::Normal, GlsApproachStatus::PredictedOutage,
                          csm::OutageWindow{T0 + 4s, T0 + 10s}),
                    T0);
  for (int s = 0; s <= 4; ++s) EXPECT_EQ(mon.tick(T0 + std::chrono::seconds{s}).countdown->remaining.count(), 4 - s);
}

TEST(TickProperty, ReplayDeterminism) {
  oracle::MessageGenerator gen(8);
  std::vector<std::pair<csm::CompositeStatusMessage, UtcInstant>> inputs;
  auto now = T0;
  for (int i = 0; i < 300; ++i) {
    auto m = normalize(gen.next()).msg;
    now += Millis{static_cast<std::int64_t>(gen.rng()() % 4000)};
    inputs.emplace_back(m, now);
  }
  auto run = [&] {
    Monitor mon;
    std::vector<DisplayState> out;
    for (const auto& [m, at] : inputs) {
      mon.apply_message(m, at);
      out.push_back(mon.tick(at));
      out.push_back(mon.tick(at + 2500ms));
    }
    return out;
  };
  EXPECT_EQ(run(), run());
}

TEST(TickProperty, DisplayInvariantsOverRandomInputs) {
  oracle::MessageGenerator gen(23);
  Monitor mon;
  auto now = T0;
  for (int i = 0; i < 2000; ++i) {
    auto m = normalize(gen.next()).msg;
    m.timestamp = now;
    if (!csm::validate(m)) mon.apply_message(m, now);
    now += Millis{static_cast<std::int64_t>(gen.rng()() % 8000)};
    const auto s = mon.tick(now);
    const bool grey = s.mode_panel.color == PanelColor::Grey || s.approach_panel.color == PanelColor::Grey;
    ASSERT_EQ(grey, s.connectivity == Connectivity::NoData);
    if (s.connectivity == Connectivity::NoData) {
      ASSERT_FALSE(s.countdown);
      ASSERT_EQ(s.message_block->color, PanelColor::Grey);
      continue;
    }
    const bool expect_countdown = s.approach_panel.label == "PREDICTED OUTAGE" ||
                                  (s.approach_panel.label == "NOT AVAILABLE" && s.outage);
    ASSERT_EQ(s.countdown.has_value(), expect_countdown);
    ASSERT_TRUE(std::is_sorted(s.active_alerts.begin(), s.active_alerts.end(),
                               [](const auto& a, const auto& b) { return a.id < b.id; }));
  }
}

}  // namespace
