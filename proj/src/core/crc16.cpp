#include "core/crc16.hpp"

#include <stdexcept>

namespace pb {

namespace {

// Shift one message bit into the 16-bit register (long division step).
inline std::uint16_t crc16_step(std::uint16_t reg, std::uint8_t bit) {
  const std::uint8_t top = static_cast<std::uint8_t>((reg >> 15) & 1u);
  reg = static_cast<std::uint16_t>(reg << 1);
  if (top ^ bit) {
    reg = static_cast<std::uint16_t>(reg ^ (kCrc16Poly & 0xFFFFu));
  }
  return reg;
}

}  // namespace

Bits crc16_bits(const Bits& payload) {
  std::uint16_t reg = 0;
  for (std::uint8_t b : payload) {
    if (b > 1) throw std::invalid_argument("crc16: bits must be 0 or 1");
    reg = crc16_step(reg, b);
  }
  Bits out(kCrc16Bits);
  for (int i = 0; i < kCrc16Bits; ++i) {
    out[i] = static_cast<std::uint8_t>((reg >> (15 - i)) & 1u);
  }
  return out;
}

std::uint16_t crc16_bytes(const std::uint8_t* data, std::size_t len) {
  std::uint16_t reg = 0;
  for (std::size_t i = 0; i < len; ++i) {
    for (int k = 7; k >= 0; --k) {
      reg = crc16_step(reg, static_cast<std::uint8_t>((data[i] >> k) & 1u));
    }
  }
  return reg;
}

bool crc16_check(const Bits& payload_and_crc) {
  if (payload_and_crc.size() < static_cast<std::size_t>(kCrc16Bits)) {
    throw std::invalid_argument("crc16_check: input shorter than the parity field");
  }
  const std::size_t k = payload_and_crc.size() - kCrc16Bits;
  Bits payload(payload_and_crc.begin(), payload_and_crc.begin() + k);
  const Bits expect = crc16_bits(payload);
  for (int i = 0; i < kCrc16Bits; ++i) {
    if (expect[i] != payload_and_crc[k + i]) return false;
  }
  return true;
}

}  // namespace pb
