#include "atsu/csm/types.hpp"

namespace atsu::csm {

std::string_view to_string(GbasMode m) {
  switch (m) {
    case GbasMode::Normal: return "NORMAL";
    case GbasMode::Alarm: return "ALARM";
    case GbasMode::Test: return "TEST";
  }
  return "?";
}

std::string_view to_string(GlsApproachStatus a) {
  switch (a) {
    case GlsApproachStatus::Available: return "AVAILABLE";
    case GlsApproachStatus::PredictedOutage: return "PREDICTED_OUTAGE";
    case GlsApproachStatus::NotAvailable: return "NOT_AVAILABLE";
  }
  return "?";
}

std::optional<GbasMode> parse_mode(std::string_view s) {
  for (auto m : kAllModes)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<GlsApproachStatus> parse_approach(std::string_view s) {
  for (auto a : kAllApproaches)
    if (to_string(a) == s) return a;
  return std::nullopt;
}

StationId::StationId(std::string_view id) {
  if (id.size() > kWidth) throw InvalidMessage("station_id", "longer than 8 characters");
  bytes_.fill(' ');
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (!is_printable(id[i])) throw InvalidMessage("station_id", "non-printable character");
    bytes_[i] = id[i];
  }
}

std::string StationId::trimmed() const {
  std::string s = padded();
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

std::optional<Violation> validate(const CompositeStatusMessage& msg) {
  for (char c : msg.station_id.bytes())
    if (!StationId::is_printable(c)) return Violation{"station_id", "non-printable character"};
  if (msg.timestamp.time_since_epoch().count() < 0) return Violation{"timestamp", "before the Unix epoch"};
  if (msg.outage) {
    if (msg.outage->start.time_since_epoch().count() < 0) return Violation{"outage.start", "before the Unix epoch"};
    if (msg.outage->end <= msg.outage->start) return Violation{"outage.end", "must be after outage.start"};
  }
  if (msg.approach == GlsApproachStatus::PredictedOutage) {
    if (!msg.outage) return Violation{"outage", "PREDICTED_OUTAGE requires an outage window"};
    if (msg.outage->start <= msg.timestamp)
      return Violation{"outage.start", "PREDICTED_OUTAGE requires start after timestamp"};
  }
  if (msg.approach == GlsApproachStatus::NotAvailable && msg.outage && msg.outage->end <= msg.timestamp)
    return Violation{"outage.end", "NOT_AVAILABLE window must end after timestamp"};
  return std::nullopt;
}

}  // namespace atsu::csm
