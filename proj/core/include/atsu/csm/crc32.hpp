#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace atsu::csm {

// CRC-32 (ISO-HDLC / IEEE 802.3): poly 0x04C11DB7 reflected, init and final
// xor 0xFFFFFFFF. Check value for "123456789" is 0xCBF43926.
std::uint32_t crc32(std::span<const std::uint8_t> data);

}  // namespace atsu::csm
