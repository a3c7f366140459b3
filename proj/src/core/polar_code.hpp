#pragma once

#include <vector>

#include "core/bits.hpp"

namespace pb {

// Default message layout for K = 24: a 16-bit identifier followed by an
// 8-bit payload.  The layout is a naming convention only; every message bit
// is treated identically by the encoder and the detectors.
inline constexpr int kIdentifierBits = 16;
inline constexpr int kPayloadBits = 8;

struct PolarCode {
  int n = 0;             // log2(N)
  int N = 0;             // block length
  int K = 0;             // message bits
  int C = 0;             // appended CRC bits (16 when the CRC is in use)
  double design_param = 0.5;

  std::vector<int> info_set;        // ascending, size K + C
  std::vector<std::uint8_t> is_info;  // mask over [0, N)
  std::vector<double> bhatta;       // Bhattacharyya parameter per input index

  std::vector<int> frozen_set() const;
};

// Builds the code via the Bhattacharyya-parameter recursion.  Starting from
// z = design_param for the raw channel, each polarization step maps z to
// z^2 for the "bad" branch (bit 1 of the index, MSB first) and 2z - z^2 for
// the "good" branch.  The K + C indices with the smallest final z form the
// information set; ties resolve toward the higher index.
PolarCode build_code(int N, int K, int C, double design_param = 0.5);

// Places msg (K bits) followed by its 16 CRC bits into the information set
// positions in ascending order; frozen positions are zero.
Bits assemble_message(const PolarCode& code, const Bits& msg);

// x = u * G.  Throws if a frozen position of u is nonzero.
Bits encode(const PolarCode& code, const Bits& u);

// The K message bits of an assembled input vector.
Bits extract_message(const PolarCode& code, const Bits& u);

// All K + C information-set bits (message followed by CRC) of u.
Bits extract_info(const PolarCode& code, const Bits& u);

}  // namespace pb
