#include "atsu/monitor/display.hpp"

#include <cstdio>

namespace atsu::monitor {

using csm::GbasMode;
using csm::GlsApproachStatus;

std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::ApproachNormalized: return "APPROACH_NORMALIZED";
    case DiagnosticKind::OutOfOrder: return "OUT_OF_ORDER";
    case DiagnosticKind::SequenceResync: return "SEQUENCE_RESYNC";
    case DiagnosticKind::ClockSkew: return "CLOCK_SKEW";
    case DiagnosticKind::CountdownSaturated: return "COUNTDOWN_SATURATED";
    case DiagnosticKind::DecodeError: return "DECODE_ERROR";
  }
  return "?";
}

std::string_view to_string(PanelColor c) {
  switch (c) {
    case PanelColor::Green: return "GREEN";
    case PanelColor::Yellow: return "YELLOW";
    case PanelColor::Red: return "RED";
    case PanelColor::Grey: return "GREY";
  }
  return "?";
}

std::string_view to_string(Connectivity c) { return c == Connectivity::Connected ? "CONNECTED" : "NO_DATA"; }

std::string_view to_string(CountdownKind k) {
  return k == CountdownKind::ToOutageStart ? "TO_OUTAGE_START" : "TO_SERVICE_RETURN";
}

Normalized normalize(csm::CompositeStatusMessage msg) {
  Normalized out;
  if (msg.mode != GbasMode::Normal && msg.approach != GlsApproachStatus::NotAvailable) {
    out.diagnostics.push_back({DiagnosticKind::ApproachNormalized,
                               std::string(csm::to_string(msg.mode)) + " with " +
                                   std::string(csm::to_string(msg.approach)) + " rewritten to NOT_AVAILABLE"});
    msg.approach = GlsApproachStatus::NotAvailable;
  }
  out.msg = std::move(msg);
  return out;
}

namespace {

std::string approach_label(GlsApproachStatus a) {
  switch (a) {
    case GlsApproachStatus::Available: return "AVAILABLE";
    case GlsApproachStatus::PredictedOutage: return "PREDICTED OUTAGE";
    case GlsApproachStatus::NotAvailable: return "NOT AVAILABLE";
  }
  return "?";
}

}  // namespace

Panels render_panels(Connectivity connectivity, GbasMode mode, GlsApproachStatus approach) {
  if (connectivity == Connectivity::NoData)
    return {{"NO DATA", PanelColor::Grey}, {"NO DATA", PanelColor::Grey}, Panel{"NO DATA", PanelColor::Grey}};

  if (mode != GbasMode::Normal) approach = GlsApproachStatus::NotAvailable;
  const std::string mode_label(csm::to_string(mode));
  const auto label = approach_label(approach);

  switch (mode) {
    case GbasMode::Normal:
      switch (approach) {
        case GlsApproachStatus::Available:
          return {{mode_label, PanelColor::Green}, {label, PanelColor::Green}, std::nullopt};
        case GlsApproachStatus::PredictedOutage:
          return {{mode_label, PanelColor::Green}, {label, PanelColor::Yellow}, Panel{label, PanelColor::Yellow}};
        case GlsApproachStatus::NotAvailable:
          return {{mode_label, PanelColor::Green}, {label, PanelColor::Red}, Panel{label, PanelColor::Red}};
      }
      break;
    case GbasMode::Alarm:
      return {{mode_label, PanelColor::Red}, {label, PanelColor::Red}, Panel{label, PanelColor::Red}};
    case GbasMode::Test:
      return {{mode_label, PanelColor::Red}, {label, PanelColor::Yellow}, Panel{label, PanelColor::Red}};
  }
  return {{mode_label, PanelColor::Red}, {label, PanelColor::Red}, Panel{label, PanelColor::Red}};
}

std::string format_countdown(std::chrono::seconds remaining, Diagnostics* diag) {
  auto s = remaining.count() < 0 ? 0 : remaining.count();
  constexpr long long kMax = 99 * 3600 + 59 * 60 + 59;
  if (s > kMax) {
    if (diag)
      diag->push_back({DiagnosticKind::CountdownSaturated,
                       "countdown of " + std::to_string(s) + " s exceeds 99:59:59"});
    s = kMax;
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld", static_cast<long long>(s / 3600),
                static_cast<long long>(s / 60 % 60), static_cast<long long>(s % 60));
  return buf;
}

}  // namespace atsu::monitor
