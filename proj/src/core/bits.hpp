#pragma once

#include <cstdint>
#include <vector>

namespace pb {

// One bit per element, values restricted to 0/1.
using Bits = std::vector<std::uint8_t>;

// Log-likelihood ratios; v >= 0 favors bit 0.
using Llrs = std::vector<double>;

// In-place polar transform x = u * G over GF(2), where G is the n-fold
// Kronecker power of [[1,0],[1,1]] in natural bit order (no bit reversal).
// The transform is an involution: applying it twice restores the input.
void polar_transform_inplace(Bits& v);

Bits polar_transform(Bits v);

inline std::uint8_t hard_decision(double llr) { return llr >= 0.0 ? 0 : 1; }

bool is_power_of_two(std::size_t v);

}  // namespace pb
