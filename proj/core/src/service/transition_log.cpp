#include "atsu/service/transition_log.hpp"

#include <stdexcept>

#include "atsu/csm/json.hpp"
#include "atsu/monitor/json.hpp"

namespace atsu::service {

using nlohmann::json;

std::string_view to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Message: return "MESSAGE";
    case RecordKind::TickTransition: return "TICK_TRANSITION";
    case RecordKind::Diagnostic: return "DIAGNOSTIC";
  }
  return "?";
}

json to_json(const TransitionRecord& r) {
  return {{"n", r.index}, {"at", to_epoch_ms(r.at)}, {"kind", to_string(r.kind)}, {"payload", r.payload}};
}

TransitionRecord record_from_json(const json& j) {
  TransitionRecord r;
  r.index = j.at("n").get<std::uint64_t>();
  r.at = from_epoch_ms(j.at("at").get<std::int64_t>());
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "MESSAGE") r.kind = RecordKind::Message;
  else if (kind == "TICK_TRANSITION") r.kind = RecordKind::TickTransition;
  else if (kind == "DIAGNOSTIC") r.kind = RecordKind::Diagnostic;
  else throw std::runtime_error("unknown record kind " + kind);
  r.payload = j.at("payload");
  return r;
}

void MemoryLog::append(const TransitionRecord& r) {
  std::lock_guard lock(mu_);
  records_.push_back(r);
}

std::vector<TransitionRecord> MemoryLog::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

JsonlLog::JsonlLog(std::filesystem::path path) : path_(std::move(path)), out_(path_, std::ios::app) {
  if (!out_) throw std::runtime_error("cannot open transition log " + path_.string());
}

JsonlLog JsonlLog::in_directory(const std::filesystem::path& dir, UtcInstant run_start) {
  std::filesystem::create_directories(dir);
  return JsonlLog(dir / ("atsu-" + std::to_string(to_epoch_ms(run_start)) + ".jsonl"));
}

void JsonlLog::append(const TransitionRecord& r) {
  out_ << to_json(r).dump() << '\n';
  out_.flush();
}

std::vector<TransitionRecord> read_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<TransitionRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::optional<json> TransitionDetector::observe(const monitor::DisplayState& s) {
  auto sig = monitor::status_signature(s);
  if (!last_.is_null() && sig == last_) return std::nullopt;
  json payload{{"changed", monitor::signature_diff(last_, sig)}, {"status", sig}};
  last_ = std::move(sig);
  return payload;
}

ReplayReport replay(const std::vector<TransitionRecord>& records, monitor::MonitorConfig config,
                    std::shared_ptr<const monitor::Catalog> catalog) {
  ReplayReport report;
  monitor::Monitor mon(config, std::move(catalog));
  TransitionDetector detector;
  auto tick = [&](UtcInstant at) {
    if (auto t = detector.observe(mon.tick(at))) report.replayed.push_back({at, std::move(*t)});
  };

  for (const auto& r : records) {
    switch (r.kind) {
      case RecordKind::Message: {
        auto norm = monitor::normalize(csm::message_from_json(r.payload));
        mon.apply_message(norm.msg, r.at);
        tick(r.at);
        break;
      }
      case RecordKind::TickTransition:
        report.logged.push_back({r.at, r.payload});
        tick(r.at);
        break;
      case RecordKind::Diagnostic:
        break;
    }
  }
  return report;
}

}  // namespace atsu::service
