#pragma once

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "atsu/clock.hpp"
#include "atsu/csm/types.hpp"

namespace atsu::sim {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetMode {
  csm::GbasMode mode;
};
struct SetApproach {
  csm::GlsApproachStatus approach;
};
// Offsets are relative to the instant the event fires.
struct ScheduleOutage {
  Millis start_offset;
  Millis end_offset;
};
struct SetAlerts {
  csm::AlertSet ids;
};
struct SetAlarms {
  csm::AlarmSet ids;
};
struct ClearOutage {};

using ScenarioAction = std::variant<SetMode, SetApproach, ScheduleOutage, SetAlerts, SetAlarms, ClearOutage>;

struct ScenarioEvent {
  Millis at;  // from scenario start
  ScenarioAction action;
};

struct ScenarioScript {
  static constexpr double kMinRateHz = 0.1;
  static constexpr double kMaxRateHz = 10.0;

  csm::StationId station_id{"GBAS"};
  double rate_hz = 1.0;
  std::vector<ScenarioEvent> events;

  // Throws ScenarioError.
  void validate() const;
  Millis period() const;
};

// JSON form:
//   {"station_id": "LKPR", "rate_hz": 1,
//    "events": [{"at": 0, "action": "SCHEDULE_OUTAGE", "start_offset": 120, "end_offset": 300},
//               {"at": 5, "action": "SET_MODE", "mode": "ALARM"},
//               {"at": 6, "action": "SET_ALERTS", "ids": [1, 2]}, ...]}
// Times are seconds (fractions allowed, resolved to ms).
ScenarioScript parse_scenario(const nlohmann::json& j);
ScenarioScript load_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const ScenarioScript& s);

}  // namespace atsu::sim
