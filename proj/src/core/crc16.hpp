#pragma once

#include <cstdint>

#include "core/bits.hpp"

namespace pb {

// CRC-16 with generator z^16 + z^12 + z^5 + 1, zero initial register,
// bits consumed MSB-first, no reflection, no final xor.
// The 16 parity bits are the remainder of payload(z) * z^16 mod g(z).
inline constexpr std::uint32_t kCrc16Poly = 0x11021u;  // 17-bit generator
inline constexpr int kCrc16Bits = 16;

// Computes the 16 parity bits of `payload` (any length, MSB of the register
// first in the returned vector).
Bits crc16_bits(const Bits& payload);

// Register value over packed bytes, MSB-first.  Used for the standard check
// input "123456789" (expected 0x31C3).
std::uint16_t crc16_bytes(const std::uint8_t* data, std::size_t len);

// True iff `payload_and_crc` (payload followed by its 16 parity bits) is
// consistent, i.e. the appended parity recomputes to the trailing bits.
bool crc16_check(const Bits& payload_and_crc);

}  // namespace pb
