#pragma once

// Test-only reference implementations, independent of the library code
// paths they check.

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "atsu/csm/types.hpp"

namespace atsu::oracle {

// Bit-at-a-time reflected CRC-32, no lookup table.
inline std::uint32_t crc32_bitwise(std::span<const std::uint8_t> data) {
  std::uint32_t crc = 0xFFFFFFFFu;
  for (std::uint8_t byte : data) {
    for (int bit = 0; bit < 8; ++bit) {
      const bool in = ((byte >> bit) & 1u) != 0;
      const bool top = (crc & 1u) != 0;
      crc >>= 1;
      if (in != top) crc ^= 0xEDB88320u;
    }
  }
  return ~crc;
}

// Serial-number "newer than" over modulus 2^bits with window 2^(bits-1).
inline bool serial_newer_mod(std::uint64_t a, std::uint64_t b, unsigned bits) {
  const std::uint64_t mod = 1ULL << bits;
  const std::uint64_t d = (a + mod - b) % mod;
  return d >= 1 && d < mod / 2;
}

// Random valid CompositeStatusMessage built field by field from the
// invariants, not through any library validation.
class MessageGenerator {
 public:
  explicit MessageGenerator(std::uint64_t seed) : rng_(seed) {}

  csm::CompositeStatusMessage next() {
    csm::CompositeStatusMessage m;
    std::string id;
    const int len = uniform(0, 8);
    for (int i = 0; i < len; ++i) id.push_back(static_cast<char>(uniform(0x20, 0x7E)));
    m.station_id = csm::StationId(id);
    m.sequence = static_cast<std::uint32_t>(rng_());
    const std::int64_t ts = uniform64(0, 1LL << 50);
    m.timestamp = from_epoch_ms(ts);
    m.mode = static_cast<csm::GbasMode>(uniform(0, 2));
    m.approach = static_cast<csm::GlsApproachStatus>(uniform(0, 2));

    switch (m.approach) {
      case csm::GlsApproachStatus::PredictedOutage: {
        const auto start = ts + uniform64(1, 1'000'000'000);
        m.outage = csm::OutageWindow{from_epoch_ms(start), from_epoch_ms(start + uniform64(1, 1'000'000'000))};
        break;
      }
      case csm::GlsApproachStatus::NotAvailable:
        if (uniform(0, 1)) {
          const auto end = ts + uniform64(1, 1'000'000'000);
          m.outage = csm::OutageWindow{from_epoch_ms(uniform64(0, end - 1)), from_epoch_ms(end)};
        }
        break;
      case csm::GlsApproachStatus::Available:
        if (uniform(0, 3) == 0) {
          const auto start = uniform64(0, 1LL << 50);
          m.outage = csm::OutageWindow{from_epoch_ms(start), from_epoch_ms(start + uniform64(1, 1'000'000))};
        }
        break;
    }
    m.alerts = csm::AlertSet::from_mask(rng_() & csm::AlertSet::kValidMask);
    m.alarms = csm::AlarmSet::from_mask(rng_() & csm::AlarmSet::kValidMask);
    return m;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::int64_t uniform64(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::mt19937_64 rng_;
};

}  // namespace atsu::oracle
