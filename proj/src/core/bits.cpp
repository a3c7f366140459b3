#include "core/bits.hpp"

#include <stdexcept>
#include <utility>

namespace pb {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void polar_transform_inplace(Bits& v) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("polar_transform: length must be a power of two");
  }
  // Butterfly with ascending stage distance; stage d combines v[i] ^= v[i+d]
  // within each block of width 2d.  Equivalent to multiplying by G.
  for (std::size_t d = 1; d < n; d <<= 1) {
    for (std::size_t blk = 0; blk < n; blk += 2 * d) {
      for (std::size_t i = blk; i < blk + d; ++i) {
        v[i] = static_cast<std::uint8_t>(v[i] ^ v[i + d]);
      }
    }
  }
}

Bits polar_transform(Bits v) {
  polar_transform_inplace(v);
  return v;
}

}  // namespace pb
