#pragma once

#include <random>

#include "core/bits.hpp"

namespace pb {

// Saturation magnitude standing in for an infinite LLR (noiseless channel,
// frozen-bit priors).
inline constexpr double kLlrSaturation = 1e6;

struct ChannelParams {
  double ebn0_db = 0.0;
  double sigma2 = 0.0;  // noise variance per real dimension
};

// Noise variance for BPSK over AWGN at the given Eb/N0.  The energy per
// information bit counts only the K message bits: sigma^2 = 1/(2 R 10^{x/10})
// with R = K/N.
ChannelParams make_channel(double ebn0_db, int K, int N);

// BPSK-modulates x (0 -> +1, 1 -> -1), adds N(0, sigma2) noise from `rng`,
// and returns channel LLRs 2y/sigma2.  Consumes exactly x.size() normal
// draws from the engine.
Llrs transmit(const Bits& x, const ChannelParams& ch, std::mt19937_64& rng);

// Noiseless observation of x: LLRs are +/- kLlrSaturation.
Llrs transmit_noiseless(const Bits& x);

// Uniform random bits; used for the filler blocks in the search-space model.
Bits random_bits(int n, std::mt19937_64& rng);

}  // namespace pb
