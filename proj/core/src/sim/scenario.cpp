#include "atsu/sim/scenario.hpp"

#include <cmath>
#include <fstream>

namespace atsu::sim {

using nlohmann::json;

namespace {

Millis seconds_field(const json& j, const char* key) {
  const double s = j.at(key).get<double>();
  if (!std::isfinite(s)) throw ScenarioError(std::string(key) + " must be finite");
  return Millis{std::llround(s * 1000.0)};
}

double to_seconds(Millis ms) { return static_cast<double>(ms.count()) / 1000.0; }

template <typename Set>
Set id_set(const json& j) {
  Set s;
  try {
    for (const auto& id : j.at("ids")) s.insert(id.get<int>());
  } catch (const std::out_of_range& e) {
    throw ScenarioError(e.what());
  }
  return s;
}

ScenarioAction parse_action(const json& e) {
  const auto name = e.at("action").get<std::string>();
  if (name == "SET_MODE") {
    auto m = csm::parse_mode(e.at("mode").get<std::string>());
    if (!m) throw ScenarioError("unknown mode in SET_MODE");
    return SetMode{*m};
  }
  if (name == "SET_APPROACH") {
    auto a = csm::parse_approach(e.at("approach").get<std::string>());
    if (!a) throw ScenarioError("unknown approach in SET_APPROACH");
    return SetApproach{*a};
  }
  if (name == "SCHEDULE_OUTAGE") return ScheduleOutage{seconds_field(e, "start_offset"), seconds_field(e, "end_offset")};
  if (name == "SET_ALERTS") return SetAlerts{id_set<csm::AlertSet>(e)};
  if (name == "SET_ALARMS") return SetAlarms{id_set<csm::AlarmSet>(e)};
  if (name == "CLEAR_OUTAGE") return ClearOutage{};
  throw ScenarioError("unknown action " + name);
}

struct ActionToJson {
  json& j;
  void operator()(const SetMode& a) const {
    j["action"] = "SET_MODE";
    j["mode"] = csm::to_string(a.mode);
  }
  void operator()(const SetApproach& a) const {
    j["action"] = "SET_APPROACH";
    j["approach"] = csm::to_string(a.approach);
  }
  void operator()(const ScheduleOutage& a) const {
    j["action"] = "SCHEDULE_OUTAGE";
    j["start_offset"] = to_seconds(a.start_offset);
    j["end_offset"] = to_seconds(a.end_offset);
  }
  void operator()(const SetAlerts& a) const {
    j["action"] = "SET_ALERTS";
    j["ids"] = a.ids.ids();
  }
  void operator()(const SetAlarms& a) const {
    j["action"] = "SET_ALARMS";
    j["ids"] = a.ids.ids();
  }
  void operator()(const ClearOutage&) const { j["action"] = "CLEAR_OUTAGE"; }
};

}  // namespace

void ScenarioScript::validate() const {
  if (!(rate_hz >= kMinRateHz && rate_hz <= kMaxRateHz))
    throw ScenarioError("rate_hz must be within [0.1, 10], got " + std::to_string(rate_hz));
  Millis prev{0};
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.at.count() < 0) throw ScenarioError("event " + std::to_string(i) + " has negative time");
    if (e.at < prev) throw ScenarioError("event " + std::to_string(i) + " is out of time order");
    prev = e.at;
    if (const auto* o = std::get_if<ScheduleOutage>(&e.action)) {
      if (o->start_offset.count() < 0 || o->end_offset <= o->start_offset)
        throw ScenarioError("event " + std::to_string(i) + ": SCHEDULE_OUTAGE needs end_offset > start_offset >= 0");
    }
  }
}

Millis ScenarioScript::period() const { return Millis{std::llround(1000.0 / rate_hz)}; }

ScenarioScript parse_scenario(const json& j) {
  ScenarioScript s;
  try {
    if (j.contains("station_id")) s.station_id = csm::StationId(j.at("station_id").get<std::string>());
    if (j.contains("rate_hz")) s.rate_hz = j.at("rate_hz").get<double>();
    if (j.contains("events"))
      for (const auto& e : j.at("events")) s.events.push_back({seconds_field(e, "at"), parse_action(e)});
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  } catch (const csm::InvalidMessage& e) {
    throw ScenarioError(e.what());
  }
  s.validate();
  return s;
}

ScenarioScript load_scenario(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ScenarioError("cannot open scenario " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
  return parse_scenario(j);
}

json to_json(const ScenarioScript& s) {
  json events = json::array();
  for (const auto& e : s.events) {
    json j{{"at", to_seconds(e.at)}};
    std::visit(ActionToJson{j}, e.action);
    events.push_back(std::move(j));
  }
  return {{"station_id", s.station_id.trimmed()}, {"rate_hz", s.rate_hz}, {"events", std::move(events)}};
}

}  // namespace atsu::sim
