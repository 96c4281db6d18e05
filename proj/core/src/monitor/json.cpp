#include "atsu/monitor/json.hpp"

namespace atsu::monitor {

using nlohmann::json;

namespace {

json panel(const Panel& p) { return {{"label", p.label}, {"color", to_string(p.color)}}; }

json entries(const std::vector<ActiveEntry>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back({{"id", e.id}, {"code", e.code}, {"description", e.description}});
  return a;
}

json outage(const std::optional<csm::OutageWindow>& w) {
  if (!w) return nullptr;
  return {{"start", to_epoch_ms(w->start)}, {"end", to_epoch_ms(w->end)}};
}

}  // namespace

json to_json(const DisplayState& s) {
  json j{
      {"connectivity", to_string(s.connectivity)},
      {"mode_panel", panel(s.mode_panel)},
      {"approach_panel", panel(s.approach_panel)},
      {"message_block", s.message_block ? json{{"text", s.message_block->label},
                                               {"color", to_string(s.message_block->color)}}
                                        : json(nullptr)},
      {"countdown", nullptr},
      {"outage", outage(s.outage)},
      {"utc_clock", to_epoch_ms(s.utc_clock)},
      {"utc_text", format_utc(s.utc_clock)},
      {"active_alerts", entries(s.active_alerts)},
      {"active_alarms", entries(s.active_alarms)},
      {"station_id", s.station_id},
      {"last_sequence", s.last_sequence},
      {"out_of_order", s.out_of_order},
  };
  if (s.countdown)
    j["countdown"] = {{"kind", to_string(s.countdown->kind)},
                      {"target", to_epoch_ms(s.countdown->target)},
                      {"remaining", s.countdown->remaining.count()},
                      {"text", s.countdown->text}};
  return j;
}

json to_json(const Diagnostic& d) { return {{"kind", to_string(d.kind)}, {"text", d.text}}; }

json to_json(const Catalog& c, CatalogKind kind) {
  json a = json::array();
  for (const auto& [id, e] : c.entries(kind)) a.push_back({{"id", id}, {"code", e.code}, {"description", e.description}});
  return a;
}

json status_signature(const DisplayState& s) {
  json sig{
      {"connectivity", to_string(s.connectivity)},
      {"mode_panel", panel(s.mode_panel)},
      {"approach_panel", panel(s.approach_panel)},
      {"message_block", s.message_block ? json{{"text", s.message_block->label},
                                               {"color", to_string(s.message_block->color)}}
                                        : json(nullptr)},
      {"countdown", nullptr},
      {"outage", outage(s.outage)},
      {"alerts", json::array()},
      {"alarms", json::array()},
      {"station_id", s.station_id},
  };
  if (s.countdown)
    sig["countdown"] = {{"kind", to_string(s.countdown->kind)}, {"target", to_epoch_ms(s.countdown->target)}};
  for (const auto& e : s.active_alerts) sig["alerts"].push_back(e.id);
  for (const auto& e : s.active_alarms) sig["alarms"].push_back(e.id);
  return sig;
}

json signature_diff(const json& prev, const json& next) {
  json out = json::object();
  for (const auto& [k, v] : next.items())
    if (prev.is_null() || !prev.contains(k) || prev.at(k) != v) out[k] = v;
  return out;
}

}  // namespace atsu::monitor
