#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "atsu/clock.hpp"
#include "atsu/csm/types.hpp"
#include "atsu/sim/scenario.hpp"

namespace atsu::sim {

enum class ControlCommand { Normal, Alarm, Test, Outage, Reset };

std::string_view to_string(ControlCommand c);
std::optional<ControlCommand> parse_command(std::string_view s);  // case-insensitive

struct SimulatorOptions {
  Millis outage_lead{std::chrono::minutes{2}};
  Millis outage_duration{std::chrono::minutes{3}};
  std::uint32_t first_sequence = 1;
};

// GBAS ground station stand-in. Owns the scenario cursor, the live status
// truth and the emission schedule. Not thread-safe; one owner drives it.
class Simulator {
 public:
  Simulator(ScenarioScript script, UtcInstant start, SimulatorOptions options = {});

  // Fires due scenario events, then emits at most one frame if an emission
  // period has been reached. Frames are always valid and normalized.
  std::optional<csm::CompositeStatusMessage> step(UtcInstant now);

  void control(ControlCommand command, UtcInstant now);

  // The frame that would be emitted at `now` (sequence = next to send).
  csm::CompositeStatusMessage compose(UtcInstant now) const;
  nlohmann::json state_json(UtcInstant now) const;

  const ScenarioScript& script() const { return script_; }
  std::uint64_t frames_emitted() const { return frames_; }

 private:
  struct Truth {
    csm::GbasMode mode = csm::GbasMode::Normal;
    std::optional<csm::GlsApproachStatus> approach_override;
    std::optional<csm::OutageWindow> outage;
    csm::AlertSet alerts;
    csm::AlarmSet alarms;
  };

  void apply(const ScenarioAction& action, UtcInstant fired_at);
  void expire(UtcInstant now);

  ScenarioScript script_;
  SimulatorOptions options_;
  UtcInstant start_;
  Millis period_;
  std::size_t cursor_ = 0;
  Truth truth_;
  std::uint32_t next_sequence_;
  UtcInstant next_emit_;
  std::uint64_t frames_ = 0;
};

}  // namespace atsu::sim
