#pragma once

#include <nlohmann/json.hpp>

#include "atsu/monitor/catalog.hpp"
#include "atsu/monitor/diagnostic.hpp"
#include "atsu/monitor/display.hpp"

namespace atsu::monitor {

nlohmann::json to_json(const DisplayState& s);
nlohmann::json to_json(const Diagnostic& d);
nlohmann::json to_json(const Catalog& c, CatalogKind kind);

// The fields whose change constitutes a status transition. Excludes the
// clock, countdown remaining/text and sequence number, which move every tick.
nlohmann::json status_signature(const DisplayState& s);

// Keys of `next` whose values differ from `prev` (all keys if prev is null).
nlohmann::json signature_diff(const nlohmann::json& prev, const nlohmann::json& next);

}  // namespace atsu::monitor
