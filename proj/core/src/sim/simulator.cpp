#include "atsu/sim/simulator.hpp"

#include <algorithm>
#include <cctype>

#include "atsu/csm/json.hpp"

namespace atsu::sim {

using csm::GbasMode;
using csm::GlsApproachStatus;

std::string_view to_string(ControlCommand c) {
  switch (c) {
    case ControlCommand::Normal: return "normal";
    case ControlCommand::Alarm: return "alarm";
    case ControlCommand::Test: return "test";
    case ControlCommand::Outage: return "outage";
    case ControlCommand::Reset: return "reset";
  }
  return "?";
}

std::optional<ControlCommand> parse_command(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto c : {ControlCommand::Normal, ControlCommand::Alarm, ControlCommand::Test, ControlCommand::Outage,
                 ControlCommand::Reset})
    if (to_string(c) == lower) return c;
  return std::nullopt;
}

Simulator::Simulator(ScenarioScript script, UtcInstant start, SimulatorOptions options)
    : script_(std::move(script)),
      options_(options),
      start_(start),
      next_sequence_(options.first_sequence),
      next_emit_(start) {
  script_.validate();
  period_ = script_.period();
}

void Simulator::apply(const ScenarioAction& action, UtcInstant fired_at) {
  struct Visitor {
    Truth& t;
    UtcInstant at;
    void operator()(const SetMode& a) const { t.mode = a.mode; }
    void operator()(const SetApproach& a) const { t.approach_override = a.approach; }
    void operator()(const ScheduleOutage& a) const {
      t.outage = csm::OutageWindow{at + a.start_offset, at + a.end_offset};
      t.approach_override.reset();
    }
    void operator()(const SetAlerts& a) const { t.alerts = a.ids; }
    void operator()(const SetAlarms& a) const { t.alarms = a.ids; }
    void operator()(const ClearOutage&) const {
      t.outage.reset();
      t.approach_override.reset();
    }
  };
  std::visit(Visitor{truth_, fired_at}, action);
}

void Simulator::expire(UtcInstant now) {
  if (truth_.outage && now >= truth_.outage->end) truth_.outage.reset();
}

std::optional<csm::CompositeStatusMessage> Simulator::step(UtcInstant now) {
  while (cursor_ < script_.events.size() && start_ + script_.events[cursor_].at <= now) {
    const auto& e = script_.events[cursor_++];
    apply(e.action, start_ + e.at);
  }
  expire(now);
  if (now < next_emit_) return std::nullopt;

  auto msg = compose(now);
  ++next_sequence_;
  ++frames_;
  next_emit_ += period_;
  if (next_emit_ <= now) next_emit_ = now + period_;
  return msg;
}

void Simulator::control(ControlCommand command, UtcInstant now) {
  switch (command) {
    case ControlCommand::Normal:
      truth_.mode = GbasMode::Normal;
      truth_.approach_override.reset();
      truth_.outage.reset();
      break;
    case ControlCommand::Alarm:
      truth_.mode = GbasMode::Alarm;
      break;
    case ControlCommand::Test:
      truth_.mode = GbasMode::Test;
      break;
    case ControlCommand::Outage: {
      const auto begin = now + options_.outage_lead;
      truth_.outage = csm::OutageWindow{begin, begin + options_.outage_duration};
      truth_.approach_override.reset();
      break;
    }
    case ControlCommand::Reset:
      truth_ = Truth{};
      break;
  }
}

csm::CompositeStatusMessage Simulator::compose(UtcInstant now) const {
  csm::CompositeStatusMessage m;
  m.station_id = script_.station_id;
  m.sequence = next_sequence_;
  m.timestamp = now;
  m.mode = truth_.mode;
  m.alerts = truth_.alerts;
  m.alarms = truth_.alarms;
  if (truth_.outage && now < truth_.outage->end) m.outage = truth_.outage;

  const bool upcoming = m.outage && now < m.outage->start;
  GlsApproachStatus approach = !m.outage ? GlsApproachStatus::Available
                               : upcoming ? GlsApproachStatus::PredictedOutage
                                          : GlsApproachStatus::NotAvailable;
  if (truth_.approach_override &&
      (*truth_.approach_override != GlsApproachStatus::PredictedOutage || upcoming))
    approach = *truth_.approach_override;
  if (m.mode != GbasMode::Normal) approach = GlsApproachStatus::NotAvailable;
  m.approach = approach;
  return m;
}

nlohmann::json Simulator::state_json(UtcInstant now) const {
  auto j = csm::to_json(compose(now));
  j["rate_hz"] = script_.rate_hz;
  j["frames_emitted"] = frames_;
  j["elapsed_ms"] = (now - start_).count();
  j["next_sequence"] = next_sequence_;
  j.erase("sequence");
  return j;
}

}  // namespace atsu::sim
