#include "atsu/csm/json.hpp"

namespace atsu::csm {

using nlohmann::json;

json to_json(const CompositeStatusMessage& msg) {
  json j{
      {"station_id", msg.station_id.trimmed()},
      {"sequence", msg.sequence},
      {"timestamp", to_epoch_ms(msg.timestamp)},
      {"mode", to_string(msg.mode)},
      {"approach", to_string(msg.approach)},
      {"outage", nullptr},
      {"alerts", msg.alerts.ids()},
      {"alarms", msg.alarms.ids()},
  };
  if (msg.outage) j["outage"] = {{"start", to_epoch_ms(msg.outage->start)}, {"end", to_epoch_ms(msg.outage->end)}};
  return j;
}

CompositeStatusMessage message_from_json(const json& j) {
  CompositeStatusMessage msg;
  msg.station_id = StationId(j.at("station_id").get<std::string>());
  msg.sequence = j.at("sequence").get<std::uint32_t>();
  msg.timestamp = from_epoch_ms(j.at("timestamp").get<std::int64_t>());
  const auto mode = parse_mode(j.at("mode").get<std::string>());
  if (!mode) throw InvalidMessage("mode", "unknown value");
  msg.mode = *mode;
  const auto approach = parse_approach(j.at("approach").get<std::string>());
  if (!approach) throw InvalidMessage("approach", "unknown value");
  msg.approach = *approach;
  if (const auto& o = j.at("outage"); !o.is_null())
    msg.outage = OutageWindow{from_epoch_ms(o.at("start").get<std::int64_t>()),
                              from_epoch_ms(o.at("end").get<std::int64_t>())};
  try {
    for (int id : j.at("alerts")) msg.alerts.insert(id);
    for (int id : j.at("alarms")) msg.alarms.insert(id);
  } catch (const std::out_of_range& e) {
    throw InvalidMessage("alerts/alarms", e.what());
  }
  if (auto v = validate(msg)) throw InvalidMessage(v->field, v->detail);
  return msg;
}

}  // namespace atsu::csm
