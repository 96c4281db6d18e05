#include "atsu/csm/crc32.hpp"

#include <gtest/gtest.h>
#include <zlib.h>

#include <random>
#include <string_view>
#include <vector>

#include "support/oracles.hpp"

namespace {

std::span<const std::uint8_t> bytes_of(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

TEST(Crc32, OraclesAgreeOnCheckValue) {
  // Confirm both references before trusting them as expected-value sources.
  const auto check = bytes_of("123456789");
  EXPECT_EQ(atsu::oracle::crc32_bitwise(check), 0xCBF43926u);
  EXPECT_EQ(::crc32(0L, check.data(), static_cast<uInt>(check.size())), 0xCBF43926u);
}

TEST(Crc32, CheckValue) { EXPECT_EQ(atsu::csm::crc32(bytes_of("123456789")), 0xCBF43926u); }

TEST(Crc32, EmptyInputIsZero) {
  EXPECT_EQ(atsu::oracle::crc32_bitwise({}), 0u);
  EXPECT_EQ(atsu::csm::crc32({}), 0x00000000u);
}

TEST(Crc32, Deterministic) {
  const auto data = bytes_of("GBAS composite status");
  EXPECT_EQ(atsu::csm::crc32(data), atsu::csm::crc32(data));
}

TEST(Crc32, MatchesReferencesOnRandomBuffers) {
  std::mt19937 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::vector<std::uint8_t> buf(rng() % 300);
    for (auto& b : buf) b = static_cast<std::uint8_t>(rng());
    const auto got = atsu::csm::crc32(buf);
    ASSERT_EQ(got, atsu::oracle::crc32_bitwise(buf)) << "length " << buf.size();
    ASSERT_EQ(got, ::crc32(0L, buf.data(), static_cast<uInt>(buf.size())));
  }
}

}  // namespace
