#pragma once

#include <cstdint>
#include <random>

namespace pb {

// Stream tags for seed derivation.  Each (root, tag, index) triple owns an
// independent random stream, which keeps results identical for any thread
// count: work items consume their own engines, never a shared one.
enum class SeedTag : std::uint64_t {
  kBlerBlock = 1,
  kMdrTrial = 2,
  kTieBreak = 3,
};

// SplitMix64 output function; a full period mix of the 64-bit counter.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, SeedTag tag, std::uint64_t index) {
  std::uint64_t s = splitmix64(root ^ 0xA0761D6478BD642Full);
  s = splitmix64(s ^ static_cast<std::uint64_t>(tag));
  s = splitmix64(s ^ index);
  return s;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace pb
