#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "atsu/csm/types.hpp"
#include "atsu/result.hpp"

namespace atsu::csm {

// Fixed 56-byte big-endian frame:
//   [0,4)   magic "CSM1"        [4]     version (1)
//   [5,13)  station id          [13,17) sequence u32
//   [17,25) timestamp ms u64    [25]    mode   [26] approach
//   [27,35) outage start ms     [35,43) outage end ms (both 0 = no window)
//   [43,51) alerts mask u64     [51]    alarms mask u8
//   [52,56) CRC-32 of [0,52)
inline constexpr std::size_t kFrameSize = 56;
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::array<std::uint8_t, 4> kMagic{0x43, 0x53, 0x4D, 0x31};

namespace offset {
inline constexpr std::size_t kMagic = 0;
inline constexpr std::size_t kVersion = 4;
inline constexpr std::size_t kStation = 5;
inline constexpr std::size_t kSequence = 13;
inline constexpr std::size_t kTimestamp = 17;
inline constexpr std::size_t kMode = 25;
inline constexpr std::size_t kApproach = 26;
inline constexpr std::size_t kOutageStart = 27;
inline constexpr std::size_t kOutageEnd = 35;
inline constexpr std::size_t kAlerts = 43;
inline constexpr std::size_t kAlarms = 51;
inline constexpr std::size_t kCrc = 52;
}  // namespace offset

using WireFrame = std::array<std::uint8_t, kFrameSize>;

enum class DecodeErrorKind {
  Truncated,
  BadMagic,
  BadVersion,
  BadCrc,
  InvalidEnum,
  ReservedBitsSet,
  InvalidMessage,
};

std::string_view to_string(DecodeErrorKind k);

struct DecodeError {
  DecodeErrorKind kind;
  std::size_t offset;  // first byte of the offending field
  std::string field;
  std::string detail;

  std::string describe() const;
};

// Throws InvalidMessage naming the violated field.
WireFrame encode(const CompositeStatusMessage& msg);

// Total over arbitrary input; never throws.
Result<CompositeStatusMessage, DecodeError> decode(std::span<const std::uint8_t> bytes);

}  // namespace atsu::csm
