#include "atsu/monitor/monitor.hpp"

#include <cstdlib>

namespace atsu::monitor {

using csm::GlsApproachStatus;

bool sequence_newer(std::uint32_t candidate, std::uint32_t last) {
  return static_cast<std::int32_t>(candidate - last) > 0;
}

Monitor::Monitor(MonitorConfig config, std::shared_ptr<const Catalog> catalog)
    : config_(config), catalog_(std::move(catalog)) {
  if (!catalog_) catalog_ = std::shared_ptr<const Catalog>(std::shared_ptr<const Catalog>{}, &Catalog::builtin());
}

bool Monitor::is_stale(UtcInstant now) const {
  return !last_receipt_ || now - *last_receipt_ > config_.stale_after;
}

Diagnostics Monitor::apply_message(const csm::CompositeStatusMessage& msg, UtcInstant now) {
  Diagnostics diag;
  if (last_ && !sequence_newer(msg.sequence, last_->sequence)) {
    if (!is_stale(now)) {
      ++out_of_order_;
      diag.push_back({DiagnosticKind::OutOfOrder, "sequence " + std::to_string(msg.sequence) +
                                                      " not after " + std::to_string(last_->sequence)});
      return diag;
    }
    diag.push_back({DiagnosticKind::SequenceResync, "stale monitor resynchronized from sequence " +
                                                        std::to_string(last_->sequence) + " to " +
                                                        std::to_string(msg.sequence)});
  }

  const auto skew = msg.timestamp - now;
  if (std::abs(skew.count()) > config_.clock_skew_limit.count())
    diag.push_back({DiagnosticKind::ClockSkew, "message timestamp differs from local clock by " +
                                                   std::to_string(skew.count()) + " ms"});

  last_ = msg;
  last_receipt_ = now;
  return diag;
}

DisplayState Monitor::tick(UtcInstant now, Diagnostics* diag) const {
  DisplayState s;
  s.utc_clock = now;
  s.out_of_order = out_of_order_;
  if (last_) {
    s.station_id = last_->station_id.trimmed();
    s.last_sequence = last_->sequence;
  }

  s.connectivity = is_stale(now) ? Connectivity::NoData : Connectivity::Connected;
  if (s.connectivity == Connectivity::NoData) {
    auto p = render_panels(s.connectivity, csm::GbasMode::Normal, GlsApproachStatus::Available);
    s.mode_panel = std::move(p.mode);
    s.approach_panel = std::move(p.approach);
    s.message_block = std::move(p.message_block);
    return s;
  }

  const auto& msg = *last_;
  auto p = render_panels(s.connectivity, msg.mode, msg.approach);
  s.mode_panel = std::move(p.mode);
  s.approach_panel = std::move(p.approach);
  s.message_block = std::move(p.message_block);
  s.outage = msg.outage;

  std::optional<std::pair<CountdownKind, UtcInstant>> target;
  if (msg.approach == GlsApproachStatus::PredictedOutage && msg.outage)
    target.emplace(CountdownKind::ToOutageStart, msg.outage->start);
  else if (msg.approach == GlsApproachStatus::NotAvailable && msg.outage)
    target.emplace(CountdownKind::ToServiceReturn, msg.outage->end);
  if (target) {
    auto remaining = std::chrono::floor<std::chrono::seconds>(target->second - now);
    if (remaining.count() < 0) remaining = std::chrono::seconds{0};
    s.countdown = Countdown{target->first, target->second, remaining, format_countdown(remaining, diag)};
  }

  for (int id : msg.alerts.ids())
    if (const auto* e = catalog_->find(CatalogKind::Alert, id)) s.active_alerts.push_back({id, e->code, e->description});
  for (int id : msg.alarms.ids())
    if (const auto* e = catalog_->find(CatalogKind::Alarm, id)) s.active_alarms.push_back({id, e->code, e->description});
  return s;
}

}  // namespace atsu::monitor
