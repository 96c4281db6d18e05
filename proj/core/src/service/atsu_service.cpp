#include "atsu/service/atsu_service.hpp"

#include "atsu/csm/codec.hpp"
#include "atsu/csm/json.hpp"
#include "atsu/monitor/json.hpp"

namespace atsu::service {

using nlohmann::json;

AtsuService::AtsuService(monitor::MonitorConfig config, std::shared_ptr<const monitor::Catalog> catalog,
                         LogSink* log, UtcInstant started)
    : catalog_(catalog ? std::move(catalog)
                       : std::shared_ptr<const monitor::Catalog>(std::shared_ptr<const monitor::Catalog>{},
                                                                 &monitor::Catalog::builtin())),
      log_(log),
      started_(started),
      monitor_(config, catalog_) {
  tick(started);
}

void AtsuService::record(UtcInstant at, RecordKind kind, json payload) {
  if (log_) log_->append({next_index_, at, kind, std::move(payload)});
  ++next_index_;
}

void AtsuService::diagnose(UtcInstant at, const monitor::Diagnostics& diags) {
  for (const auto& d : diags) {
    ++counters_.diagnostics;
    record(at, RecordKind::Diagnostic, monitor::to_json(d));
  }
}

monitor::Diagnostics AtsuService::ingest(std::span<const std::uint8_t> datagram, UtcInstant now) {
  monitor::Diagnostics diags;
  auto decoded = csm::decode(datagram);
  if (!decoded) {
    ++counters_.bad_frames;
    diags.push_back({monitor::DiagnosticKind::DecodeError, decoded.error().describe()});
    diagnose(now, diags);
    publish();
    return diags;
  }

  ++counters_.frames;
  record(now, RecordKind::Message, csm::to_json(*decoded));
  auto norm = monitor::normalize(std::move(decoded).value());
  diags = std::move(norm.diagnostics);
  auto applied = monitor_.apply_message(norm.msg, now);
  diags.insert(diags.end(), applied.begin(), applied.end());
  diagnose(now, diags);
  tick(now);
  return diags;
}

void AtsuService::tick(UtcInstant now) {
  monitor::Diagnostics diags;
  auto state = monitor_.tick(now, &diags);
  if (auto t = transitions_.observe(state)) record(now, RecordKind::TickTransition, std::move(*t));
  diagnose(now, diags);
  publish();
}

void AtsuService::publish() {
  auto snap = std::make_shared<Snapshot>(Snapshot{monitor_, counters_, 0});
  {
    std::lock_guard lock(mu_);
    snap->generation = published_ ? published_->generation + 1 : 1;
    published_ = std::move(snap);
  }
  published_cv_.notify_all();
}

std::shared_ptr<const Snapshot> AtsuService::snapshot() const {
  std::lock_guard lock(mu_);
  return published_;
}

monitor::DisplayState AtsuService::display(UtcInstant now) const { return snapshot()->monitor.tick(now); }

json AtsuService::serve_status(UtcInstant now) const {
  auto snap = snapshot();
  auto j = monitor::to_json(snap->monitor.tick(now));
  j["counters"] = {{"frames", snap->counters.frames},
                   {"bad_frames", snap->counters.bad_frames},
                   {"out_of_order", snap->monitor.out_of_order()},
                   {"diagnostics", snap->counters.diagnostics}};
  j["generation"] = snap->generation;
  return j;
}

json AtsuService::health(UtcInstant now) const {
  auto snap = snapshot();
  return {{"status", "ok"},
          {"started", to_epoch_ms(started_)},
          {"uptime_s", std::chrono::floor<std::chrono::seconds>(now - started_).count()},
          {"connectivity", monitor::to_string(snap->monitor.is_stale(now) ? monitor::Connectivity::NoData
                                                                          : monitor::Connectivity::Connected)},
          {"counters",
           {{"frames", snap->counters.frames},
            {"bad_frames", snap->counters.bad_frames},
            {"out_of_order", snap->monitor.out_of_order()},
            {"diagnostics", snap->counters.diagnostics}}}};
}

std::uint64_t AtsuService::wait_for_update(std::uint64_t seen, Millis timeout) const {
  std::unique_lock lock(mu_);
  published_cv_.wait_for(lock, timeout, [&] { return published_->generation > seen; });
  return published_->generation;
}

}  // namespace atsu::service
