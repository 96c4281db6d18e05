#pragma once

#include <nlohmann/json.hpp>

#include "atsu/csm/types.hpp"

namespace atsu::csm {

// Text form used in logs and the HTTP API. Instants are integer epoch ms.
nlohmann::json to_json(const CompositeStatusMessage& msg);

// Throws InvalidMessage (or nlohmann::json::exception) on malformed input.
CompositeStatusMessage message_from_json(const nlohmann::json& j);

}  // namespace atsu::csm
