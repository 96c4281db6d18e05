#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "atsu/clock.hpp"
#include "atsu/monitor/monitor.hpp"

namespace atsu::service {

enum class RecordKind { Message, TickTransition, Diagnostic };

std::string_view to_string(RecordKind k);

struct TransitionRecord {
  std::uint64_t index = 0;  // arrival order within the run
  UtcInstant at{};
  RecordKind kind = RecordKind::Diagnostic;
  nlohmann::json payload;

  friend bool operator==(const TransitionRecord&, const TransitionRecord&) = default;
};

// One JSON object per line: {"n":..,"at":..,"kind":"MESSAGE","payload":{..}}
nlohmann::json to_json(const TransitionRecord& r);
TransitionRecord record_from_json(const nlohmann::json& j);

class LogSink {
 public:
  virtual ~LogSink() = default;
  virtual void append(const TransitionRecord& r) = 0;
};

class MemoryLog final : public LogSink {
 public:
  void append(const TransitionRecord& r) override;
  std::vector<TransitionRecord> records() const;

 private:
  mutable std::mutex mu_;
  std::vector<TransitionRecord> records_;
};

// Append-only newline-delimited JSON file; every line is flushed.
class JsonlLog final : public LogSink {
 public:
  explicit JsonlLog(std::filesystem::path path);
  // Creates `dir` if needed and opens atsu-<start ms>.jsonl inside it.
  static JsonlLog in_directory(const std::filesystem::path& dir, UtcInstant run_start);

  void append(const TransitionRecord& r) override;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Throws std::runtime_error on unreadable files or malformed lines.
std::vector<TransitionRecord> read_log(const std::filesystem::path& path);

struct LoggedTransition {
  UtcInstant at;
  nlohmann::json payload;
  friend bool operator==(const LoggedTransition&, const LoggedTransition&) = default;
};

struct ReplayReport {
  std::vector<LoggedTransition> logged;
  std::vector<LoggedTransition> replayed;
  bool matches() const { return logged == replayed; }
};

// Feeds MESSAGE records through a fresh monitor, ticking at every MESSAGE and
// TICK_TRANSITION instant, and compares the transitions it derives with the
// logged ones.
ReplayReport replay(const std::vector<TransitionRecord>& records, monitor::MonitorConfig config = {},
                    std::shared_ptr<const monitor::Catalog> catalog = nullptr);

// Tracks the status signature and yields a TICK_TRANSITION payload when it
// changes. Shared by the live service and replay.
class TransitionDetector {
 public:
  std::optional<nlohmann::json> observe(const monitor::DisplayState& s);

 private:
  nlohmann::json last_;
};

}  // namespace atsu::service
