#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atsu/clock.hpp"

namespace atsu::csm {

enum class GbasMode : std::uint8_t { Normal = 0, Alarm = 1, Test = 2 };
enum class GlsApproachStatus : std::uint8_t { Available = 0, PredictedOutage = 1, NotAvailable = 2 };

inline constexpr std::array kAllModes{GbasMode::Normal, GbasMode::Alarm, GbasMode::Test};
inline constexpr std::array kAllApproaches{GlsApproachStatus::Available,
                                           GlsApproachStatus::PredictedOutage,
                                           GlsApproachStatus::NotAvailable};

// Enumerator names as they appear in JSON: "NORMAL", "PREDICTED_OUTAGE", ...
std::string_view to_string(GbasMode m);
std::string_view to_string(GlsApproachStatus a);
std::optional<GbasMode> parse_mode(std::string_view s);
std::optional<GlsApproachStatus> parse_approach(std::string_view s);

// Thrown by encode() and constructors when a value breaks a message invariant.
class InvalidMessage : public std::invalid_argument {
 public:
  InvalidMessage(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Eight printable ASCII characters, right-padded with spaces.
class StationId {
 public:
  static constexpr std::size_t kWidth = 8;

  StationId() { bytes_.fill(' '); }
  // Throws InvalidMessage if longer than 8 or not printable ASCII.
  explicit StationId(std::string_view id);

  static bool is_printable(char c) { return c >= 0x20 && c <= 0x7E; }

  const std::array<char, kWidth>& bytes() const { return bytes_; }
  std::string padded() const { return {bytes_.begin(), bytes_.end()}; }
  std::string trimmed() const;

  friend bool operator==(const StationId&, const StationId&) = default;

 private:
  std::array<char, kWidth> bytes_{};
};

// Set of 1-based identifiers {1..N} stored as a bitmask; bit k-1 <=> id k.
template <int N>
class IdSet {
  static_assert(N > 0 && N <= 64);

 public:
  static constexpr int kMax = N;
  static constexpr std::uint64_t kValidMask = N == 64 ? ~0ULL : ((1ULL << N) - 1);

  IdSet() = default;
  IdSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }

  static bool in_range(int id) { return id >= 1 && id <= N; }

  // Throws std::out_of_range on bits outside {1..N}.
  static IdSet from_mask(std::uint64_t mask) {
    if (mask & ~kValidMask) throw std::out_of_range("id mask has bits beyond " + std::to_string(N));
    IdSet s;
    s.mask_ = mask;
    return s;
  }

  void insert(int id) {
    if (!in_range(id)) throw std::out_of_range("id " + std::to_string(id) + " outside 1.." + std::to_string(N));
    mask_ |= 1ULL << (id - 1);
  }
  void erase(int id) {
    if (in_range(id)) mask_ &= ~(1ULL << (id - 1));
  }
  bool contains(int id) const { return in_range(id) && (mask_ >> (id - 1)) & 1ULL; }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  // Ascending.
  std::vector<int> ids() const {
    std::vector<int> out;
    for (int id = 1; id <= N; ++id)
      if (contains(id)) out.push_back(id);
    return out;
  }

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

inline constexpr int kAlertCount = 35;
inline constexpr int kAlarmCount = 6;
using AlertSet = IdSet<kAlertCount>;
using AlarmSet = IdSet<kAlarmCount>;

struct OutageWindow {
  UtcInstant start;
  UtcInstant end;

  friend bool operator==(const OutageWindow&, const OutageWindow&) = default;
};

struct CompositeStatusMessage {
  StationId station_id;
  std::uint32_t sequence = 0;
  UtcInstant timestamp{};
  GbasMode mode = GbasMode::Normal;
  GlsApproachStatus approach = GlsApproachStatus::Available;
  std::optional<OutageWindow> outage;
  AlertSet alerts;
  AlarmSet alarms;

  friend bool operator==(const CompositeStatusMessage&, const CompositeStatusMessage&) = default;
};

struct Violation {
  std::string field;
  std::string detail;
};

// Semantic invariants shared by encode, decode and the simulator. Returns
// the first violated invariant, if any.
std::optional<Violation> validate(const CompositeStatusMessage& msg);

}  // namespace atsu::csm
