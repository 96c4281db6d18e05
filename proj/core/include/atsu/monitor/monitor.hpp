#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>

#include "atsu/clock.hpp"
#include "atsu/csm/types.hpp"
#include "atsu/monitor/catalog.hpp"
#include "atsu/monitor/display.hpp"

namespace atsu::monitor {

struct MonitorConfig {
  Millis stale_after{std::chrono::seconds{5}};
  Millis clock_skew_limit{std::chrono::seconds{10}};
};

// RFC 1982 style: true iff `candidate` is ahead of `last` by 1..2^31-1.
bool sequence_newer(std::uint32_t candidate, std::uint32_t last);

// ATSU display state machine. Value type: copying yields an independent
// snapshot that can be ticked from another thread.
class Monitor {
 public:
  // A null catalog selects Catalog::builtin().
  explicit Monitor(MonitorConfig config = {}, std::shared_ptr<const Catalog> catalog = nullptr);

  // `msg` must already be normalized.
  Diagnostics apply_message(const csm::CompositeStatusMessage& msg, UtcInstant now);

  DisplayState tick(UtcInstant now, Diagnostics* diag = nullptr) const;

  bool is_stale(UtcInstant now) const;
  const std::optional<csm::CompositeStatusMessage>& last_message() const { return last_; }
  std::optional<UtcInstant> last_receipt() const { return last_receipt_; }
  std::uint64_t out_of_order() const { return out_of_order_; }
  const MonitorConfig& config() const { return config_; }
  const Catalog& catalog() const { return *catalog_; }

 private:
  MonitorConfig config_;
  std::shared_ptr<const Catalog> catalog_;
  std::optional<csm::CompositeStatusMessage> last_;
  std::optional<UtcInstant> last_receipt_;
  std::uint64_t out_of_order_ = 0;
};

}  // namespace atsu::monitor
