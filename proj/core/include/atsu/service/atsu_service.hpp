#pragma once

#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>

#include <nlohmann/json.hpp>

#include "atsu/clock.hpp"
#include "atsu/monitor/monitor.hpp"
#include "atsu/service/transition_log.hpp"

namespace atsu::service {

struct Counters {
  std::uint64_t frames = 0;
  std::uint64_t bad_frames = 0;
  std::uint64_t diagnostics = 0;
};

// Immutable published view; readers tick their own copy of the monitor.
struct Snapshot {
  monitor::Monitor monitor;
  Counters counters;
  std::uint64_t generation = 0;
};

// Transport-free ATSU process core. ingest() and tick() are the single
// writer and must be called from one thread; everything else is a reader
// and may be called concurrently. Readers never wait on the writer beyond
// a pointer swap.
class AtsuService {
 public:
  AtsuService(monitor::MonitorConfig config, std::shared_ptr<const monitor::Catalog> catalog, LogSink* log,
              UtcInstant started);

  monitor::Diagnostics ingest(std::span<const std::uint8_t> datagram, UtcInstant now);
  void tick(UtcInstant now);

  std::shared_ptr<const Snapshot> snapshot() const;
  monitor::DisplayState display(UtcInstant now) const;
  nlohmann::json serve_status(UtcInstant now) const;
  nlohmann::json health(UtcInstant now) const;
  const monitor::Catalog& catalog() const { return *catalog_; }

  // Blocks until a snapshot newer than `seen` is published or `timeout`
  // passes; returns the current generation.
  std::uint64_t wait_for_update(std::uint64_t seen, Millis timeout) const;

 private:
  void record(UtcInstant at, RecordKind kind, nlohmann::json payload);
  void diagnose(UtcInstant at, const monitor::Diagnostics& diags);
  void publish();

  std::shared_ptr<const monitor::Catalog> catalog_;
  LogSink* log_;
  UtcInstant started_;

  // Writer-owned.
  monitor::Monitor monitor_;
  Counters counters_;
  TransitionDetector transitions_;
  std::uint64_t next_index_ = 0;

  mutable std::mutex mu_;
  mutable std::condition_variable published_cv_;
  std::shared_ptr<const Snapshot> published_;
};

}  // namespace atsu::service
