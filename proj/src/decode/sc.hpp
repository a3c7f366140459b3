#pragma once

#include <algorithm>
#include <cmath>

#include "core/polar_code.hpp"

namespace pb {

// Min-sum check-node update, no scaling.
inline double f_minsum(double a, double b) {
  const double m = std::min(std::abs(a), std::abs(b));
  return (std::signbit(a) != std::signbit(b)) ? -m : m;
}

// Variable-node update with known upper-branch bit.
inline double g_update(double a, double b, std::uint8_t u) { return u ? b - a : b + a; }

// Successive-cancellation decoder.  Scratch buffers are reused across calls,
// so one instance per thread amortizes the allocations.
class ScDecoder {
 public:
  explicit ScDecoder(const PolarCode& code);

  // Returns u_hat; the reference stays valid until the next decode call.
  const Bits& decode(const Llrs& llrs);

 private:
  void recurse(int level, int start);

  const PolarCode* code_;
  // Per level l the active node at offset `start` spans N >> l entries.
  std::vector<Llrs> alpha_;
  std::vector<Bits> beta_;
  Bits u_hat_;
};

Bits sc_decode(const PolarCode& code, const Llrs& llrs);

}  // namespace pb
