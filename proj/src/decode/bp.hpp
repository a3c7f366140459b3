#pragma once

#include "core/polar_code.hpp"

namespace pb {

// Belief propagation over the encoding factor graph with a flooding
// schedule.  Stage s couples columns s and s+1; each iteration is one full
// leftward pass (stage n-1 down to 0, writing left-going messages) followed
// by one full rightward pass (stage 0 up to n-1, writing right-going
// messages).  Check-node updates use min-sum scaled by 0.9375; messages are
// clamped to +/- kLlrSaturation.
//
// After iterate():
//   alpha      u-side extrinsic LLRs (frozen priors excluded),
//   alpha_prev alpha of the previous completed iteration (valid once
//              iter >= 2),
//   beta       x-side total LLRs: channel plus the left-to-right extrinsic.
struct BpState {
  int n = 0;
  int N = 0;
  int iter = 0;                 // completed iterations
  std::vector<float> left;      // (n+1) x N, row-major
  std::vector<float> right;     // (n+1) x N, row-major
  Llrs alpha;
  Llrs alpha_prev;
  Llrs beta;
};

// Fresh state for the given channel LLRs.  Calling it again on the same
// state re-initializes it; two inits are indistinguishable from one.
void bp_init(const PolarCode& code, const Llrs& llrs, BpState& state);
BpState bp_init(const PolarCode& code, const Llrs& llrs);

// One full iteration (leftward then rightward pass).
void bp_iterate(BpState& state);

// Hard decisions on the u-side total LLR, frozen positions forced to zero.
Bits bp_decode(const BpState& state, const PolarCode& code);

}  // namespace pb
