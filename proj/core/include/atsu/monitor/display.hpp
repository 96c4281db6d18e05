#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atsu/clock.hpp"
#include "atsu/csm/types.hpp"
#include "atsu/monitor/diagnostic.hpp"

namespace atsu::monitor {

enum class PanelColor { Green, Yellow, Red, Grey };
enum class Connectivity { Connected, NoData };
enum class CountdownKind { ToOutageStart, ToServiceReturn };

std::string_view to_string(PanelColor c);
std::string_view to_string(Connectivity c);
std::string_view to_string(CountdownKind k);

struct Panel {
  std::string label;
  PanelColor color;
  friend bool operator==(const Panel&, const Panel&) = default;
};

struct Countdown {
  CountdownKind kind;
  UtcInstant target;
  std::chrono::seconds remaining;
  std::string text;
  friend bool operator==(const Countdown&, const Countdown&) = default;
};

struct ActiveEntry {
  int id;
  std::string code;
  std::string description;
  friend bool operator==(const ActiveEntry&, const ActiveEntry&) = default;
};

struct Panels {
  Panel mode;
  Panel approach;
  std::optional<Panel> message_block;
  friend bool operator==(const Panels&, const Panels&) = default;
};

// Render-ready snapshot. Immutable once produced by Monitor::tick.
struct DisplayState {
  Connectivity connectivity = Connectivity::NoData;
  Panel mode_panel;
  Panel approach_panel;
  std::optional<Panel> message_block;
  std::optional<Countdown> countdown;
  std::optional<csm::OutageWindow> outage;
  UtcInstant utc_clock{};
  std::vector<ActiveEntry> active_alerts;
  std::vector<ActiveEntry> active_alarms;
  std::string station_id;
  std::uint32_t last_sequence = 0;
  std::uint64_t out_of_order = 0;

  friend bool operator==(const DisplayState&, const DisplayState&) = default;
};

struct Normalized {
  csm::CompositeStatusMessage msg;
  Diagnostics diagnostics;
};

// ALARM and TEST force approach NOT_AVAILABLE.
Normalized normalize(csm::CompositeStatusMessage msg);

// Panel colors for the status display. Inputs that are not normalized are
// rendered as their normalized form.
Panels render_panels(Connectivity connectivity, csm::GbasMode mode, csm::GlsApproachStatus approach);

// "HH:MM:SS"; saturates at "99:59:59" for >= 100 h and reports it in `diag`.
std::string format_countdown(std::chrono::seconds remaining, Diagnostics* diag = nullptr);

}  // namespace atsu::monitor
