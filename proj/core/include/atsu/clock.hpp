#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

namespace atsu {

// Wall-clock instant with millisecond resolution, counted from the Unix epoch.
using UtcInstant = std::chrono::sys_time<std::chrono::milliseconds>;
using Millis = std::chrono::milliseconds;

constexpr UtcInstant from_epoch_ms(std::int64_t ms) { return UtcInstant{Millis{ms}}; }
constexpr std::int64_t to_epoch_ms(UtcInstant t) { return t.time_since_epoch().count(); }

// ISO-8601 "YYYY-MM-DDTHH:MM:SSZ".
std::string format_utc(UtcInstant t);

// Time source injected into everything that needs "now". Nothing in the
// library reads the system clock directly.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual UtcInstant now() const = 0;
};

class SystemClock final : public Clock {
 public:
  UtcInstant now() const override {
    return std::chrono::time_point_cast<Millis>(std::chrono::system_clock::now());
  }
};

// Test clock; only moves when told to. Safe to read from other threads.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(UtcInstant start = from_epoch_ms(0)) : ms_(to_epoch_ms(start)) {}

  UtcInstant now() const override { return from_epoch_ms(ms_.load()); }
  void set(UtcInstant t) { ms_.store(to_epoch_ms(t)); }
  void advance(Millis d) { ms_.fetch_add(d.count()); }

 private:
  std::atomic<std::int64_t> ms_;
};

}  // namespace atsu
