#include <benchmark/benchmark.h>

#include <chrono>
#include <vector>

#include "atsu/csm/codec.hpp"
#include "atsu/csm/crc32.hpp"
#include "atsu/monitor/json.hpp"
#include "atsu/monitor/monitor.hpp"

namespace {

using namespace atsu;
using namespace std::chrono_literals;

const UtcInstant kT = from_epoch_ms(1'800'000'000'000);

csm::CompositeStatusMessage sample() {
  csm::CompositeStatusMessage m;
  m.station_id = csm::StationId("LKPR");
  m.sequence = 42;
  m.timestamp = kT;
  m.approach = csm::GlsApproachStatus::PredictedOutage;
  m.outage = csm::OutageWindow{kT + 120s, kT + 300s};
  m.alerts = csm::AlertSet{1, 2, 35};
  m.alarms = csm::AlarmSet{6};
  return m;
}

void BM_Crc32(benchmark::State& state) {
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(state.range(0)), 0xA5);
  for (auto _ : state) benchmark::DoNotOptimize(csm::crc32(buf));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Crc32)->Arg(52)->Arg(4096);

void BM_Encode(benchmark::State& state) {
  const auto m = sample();
  for (auto _ : state) benchmark::DoNotOptimize(csm::encode(m));
}
BENCHMARK(BM_Encode);

void BM_Decode(benchmark::State& state) {
  const auto f = csm::encode(sample());
  for (auto _ : state) benchmark::DoNotOptimize(csm::decode(f));
}
BENCHMARK(BM_Decode);

void BM_ApplyAndTick(benchmark::State& state) {
  monitor::Monitor mon{monitor::MonitorConfig{}};
  auto m = sample();
  auto now = kT;
  for (auto _ : state) {
    ++m.sequence;
    now += 100ms;
    m.timestamp = now;
    mon.apply_message(m, now);
    benchmark::DoNotOptimize(mon.tick(now));
  }
}
BENCHMARK(BM_ApplyAndTick);

void BM_StatusJson(benchmark::State& state) {
  monitor::Monitor mon{monitor::MonitorConfig{}};
  mon.apply_message(sample(), kT);
  const auto d = mon.tick(kT);
  for (auto _ : state) benchmark::DoNotOptimize(monitor::to_json(d).dump());
}
BENCHMARK(BM_StatusJson);

}  // namespace
BENCHMARK_MAIN();
