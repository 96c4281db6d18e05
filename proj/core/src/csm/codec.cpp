#include "atsu/csm/codec.hpp"

#include <algorithm>
#include <limits>

#include "atsu/csm/crc32.hpp"

namespace atsu::csm {
namespace {

template <typename T>
void put_be(WireFrame& f, std::size_t at, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    f[at + i] = static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * (sizeof(T) - 1 - i)));
}

template <typename T>
T get_be(std::span<const std::uint8_t> b, std::size_t at) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v = (v << 8) | b[at + i];
  return static_cast<T>(v);
}

DecodeError err(DecodeErrorKind k, std::size_t off, std::string field, std::string detail) {
  return DecodeError{k, off, std::move(field), std::move(detail)};
}

std::size_t field_offset(std::string_view field) {
  if (field == "station_id") return offset::kStation;
  if (field == "timestamp") return offset::kTimestamp;
  if (field == "outage" || field == "outage.start") return offset::kOutageStart;
  if (field == "outage.end") return offset::kOutageEnd;
  return offset::kApproach;
}

}  // namespace

std::string_view to_string(DecodeErrorKind k) {
  switch (k) {
    case DecodeErrorKind::Truncated: return "Truncated";
    case DecodeErrorKind::BadMagic: return "BadMagic";
    case DecodeErrorKind::BadVersion: return "BadVersion";
    case DecodeErrorKind::BadCrc: return "BadCrc";
    case DecodeErrorKind::InvalidEnum: return "InvalidEnum";
    case DecodeErrorKind::ReservedBitsSet: return "ReservedBitsSet";
    case DecodeErrorKind::InvalidMessage: return "InvalidMessage";
  }
  return "?";
}

std::string DecodeError::describe() const {
  return std::string(to_string(kind)) + " at offset " + std::to_string(offset) + " (" + field + "): " + detail;
}

WireFrame encode(const CompositeStatusMessage& msg) {
  if (auto v = validate(msg)) throw InvalidMessage(v->field, v->detail);

  WireFrame f{};
  std::copy(kMagic.begin(), kMagic.end(), f.begin() + offset::kMagic);
  f[offset::kVersion] = kVersion;
  const auto& sid = msg.station_id.bytes();
  std::transform(sid.begin(), sid.end(), f.begin() + offset::kStation,
                 [](char c) { return static_cast<std::uint8_t>(c); });
  put_be<std::uint32_t>(f, offset::kSequence, msg.sequence);
  put_be<std::uint64_t>(f, offset::kTimestamp, static_cast<std::uint64_t>(to_epoch_ms(msg.timestamp)));
  f[offset::kMode] = static_cast<std::uint8_t>(msg.mode);
  f[offset::kApproach] = static_cast<std::uint8_t>(msg.approach);
  if (msg.outage) {
    put_be<std::uint64_t>(f, offset::kOutageStart, static_cast<std::uint64_t>(to_epoch_ms(msg.outage->start)));
    put_be<std::uint64_t>(f, offset::kOutageEnd, static_cast<std::uint64_t>(to_epoch_ms(msg.outage->end)));
  }
  put_be<std::uint64_t>(f, offset::kAlerts, msg.alerts.mask());
  f[offset::kAlarms] = static_cast<std::uint8_t>(msg.alarms.mask());
  put_be<std::uint32_t>(f, offset::kCrc, crc32(std::span(f).first(offset::kCrc)));
  return f;
}

Result<CompositeStatusMessage, DecodeError> decode(std::span<const std::uint8_t> b) {
  if (b.size() != kFrameSize)
    return err(DecodeErrorKind::Truncated, std::min(b.size(), kFrameSize), "length",
               "expected 56 bytes, got " + std::to_string(b.size()));
  if (!std::equal(kMagic.begin(), kMagic.end(), b.begin()))
    return err(DecodeErrorKind::BadMagic, offset::kMagic, "magic", "expected \"CSM1\"");
  if (b[offset::kVersion] != kVersion)
    return err(DecodeErrorKind::BadVersion, offset::kVersion, "version",
               "unsupported version " + std::to_string(b[offset::kVersion]));
  const auto stored = get_be<std::uint32_t>(b, offset::kCrc);
  const auto computed = crc32(b.first(offset::kCrc));
  if (stored != computed) return err(DecodeErrorKind::BadCrc, offset::kCrc, "crc", "checksum mismatch");

  const auto mode = b[offset::kMode];
  if (mode > 2) return err(DecodeErrorKind::InvalidEnum, offset::kMode, "mode", "code " + std::to_string(mode));
  const auto approach = b[offset::kApproach];
  if (approach > 2)
    return err(DecodeErrorKind::InvalidEnum, offset::kApproach, "approach", "code " + std::to_string(approach));

  const auto alerts = get_be<std::uint64_t>(b, offset::kAlerts);
  if (alerts & ~AlertSet::kValidMask)
    return err(DecodeErrorKind::ReservedBitsSet, offset::kAlerts, "alerts", "bits 35..63 must be zero");
  const auto alarms = b[offset::kAlarms];
  if (alarms & ~AlarmSet::kValidMask)
    return err(DecodeErrorKind::ReservedBitsSet, offset::kAlarms, "alarms", "bits 6..7 must be zero");

  constexpr auto kMaxMs = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  const auto ts = get_be<std::uint64_t>(b, offset::kTimestamp);
  const auto start = get_be<std::uint64_t>(b, offset::kOutageStart);
  const auto end = get_be<std::uint64_t>(b, offset::kOutageEnd);
  if (ts > kMaxMs) return err(DecodeErrorKind::InvalidMessage, offset::kTimestamp, "timestamp", "out of range");
  if (start > kMaxMs || end > kMaxMs)
    return err(DecodeErrorKind::InvalidMessage, offset::kOutageStart, "outage", "out of range");

  CompositeStatusMessage msg;
  for (std::size_t i = 0; i < StationId::kWidth; ++i) {
    const char c = static_cast<char>(b[offset::kStation + i]);
    if (!StationId::is_printable(c))
      return err(DecodeErrorKind::InvalidMessage, offset::kStation + i, "station_id", "non-printable byte");
  }
  msg.station_id = StationId(std::string_view(reinterpret_cast<const char*>(b.data() + offset::kStation),
                                              StationId::kWidth));
  msg.sequence = get_be<std::uint32_t>(b, offset::kSequence);
  msg.timestamp = from_epoch_ms(static_cast<std::int64_t>(ts));
  msg.mode = static_cast<GbasMode>(mode);
  msg.approach = static_cast<GlsApproachStatus>(approach);
  if (start != 0 || end != 0)
    msg.outage = OutageWindow{from_epoch_ms(static_cast<std::int64_t>(start)),
                              from_epoch_ms(static_cast<std::int64_t>(end))};
  msg.alerts = AlertSet::from_mask(alerts);
  msg.alarms = AlarmSet::from_mask(alarms);

  if (auto v = validate(msg))
    return err(DecodeErrorKind::InvalidMessage, field_offset(v->field), v->field, v->detail);
  return msg;
}

}  // namespace atsu::csm
