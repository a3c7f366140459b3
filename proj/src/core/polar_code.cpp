#include "core/polar_code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/crc16.hpp"

namespace pb {

std::vector<int> PolarCode::frozen_set() const {
  std::vector<int> out;
  out.reserve(N - static_cast<int>(info_set.size()));
  for (int i = 0; i < N; ++i) {
    if (!is_info[i]) out.push_back(i);
  }
  return out;
}

PolarCode build_code(int N, int K, int C, double design_param) {
  if (N < 2 || !is_power_of_two(static_cast<std::size_t>(N))) {
    throw std::invalid_argument("build_code: N must be a power of two, at least 2");
  }
  if (K < 1 || C < 0 || K + C > N) {
    throw std::invalid_argument("build_code: need 1 <= K and K + C <= N");
  }
  if (!(design_param > 0.0 && design_param < 1.0)) {
    throw std::invalid_argument("build_code: design parameter must be in (0, 1)");
  }

  PolarCode code;
  code.N = N;
  code.K = K;
  code.C = C;
  code.design_param = design_param;
  code.n = 0;
  while ((1 << code.n) < N) ++code.n;

  code.bhatta.resize(N);
  for (int i = 0; i < N; ++i) {
    double z = design_param;
    for (int b = code.n - 1; b >= 0; --b) {
      if ((i >> b) & 1) {
        z = z * z;
      } else {
        z = 2.0 * z - z * z;
      }
    }
    code.bhatta[i] = z;
  }

  // Indices from least to most reliable (z descending); stable, so equal z
  // keeps the lower index on the unreliable side.
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return code.bhatta[a] > code.bhatta[b]; });

  code.info_set.assign(order.end() - (K + C), order.end());
  std::sort(code.info_set.begin(), code.info_set.end());
  code.is_info.assign(N, 0);
  for (int i : code.info_set) code.is_info[i] = 1;
  return code;
}

Bits assemble_message(const PolarCode& code, const Bits& msg) {
  if (static_cast<int>(msg.size()) != code.K) {
    throw std::invalid_argument("assemble_message: message must have exactly K bits");
  }
  if (code.C != kCrc16Bits) {
    throw std::invalid_argument("assemble_message: code was built without the 16-bit CRC");
  }
  Bits info = msg;
  const Bits parity = crc16_bits(msg);
  info.insert(info.end(), parity.begin(), parity.end());

  Bits u(code.N, 0);
  for (std::size_t k = 0; k < code.info_set.size(); ++k) {
    u[code.info_set[k]] = info[k];
  }
  return u;
}

Bits encode(const PolarCode& code, const Bits& u) {
  if (static_cast<int>(u.size()) != code.N) {
    throw std::invalid_argument("encode: input must have N bits");
  }
  for (int i = 0; i < code.N; ++i) {
    if (!code.is_info[i] && u[i] != 0) {
      throw std::invalid_argument("encode: frozen positions must be zero");
    }
  }
  return polar_transform(u);
}

Bits extract_message(const PolarCode& code, const Bits& u) {
  if (static_cast<int>(u.size()) != code.N) {
    throw std::invalid_argument("extract_message: input must have N bits");
  }
  Bits msg(code.K);
  for (int k = 0; k < code.K; ++k) msg[k] = u[code.info_set[k]];
  return msg;
}

Bits extract_info(const PolarCode& code, const Bits& u) {
  if (static_cast<int>(u.size()) != code.N) {
    throw std::invalid_argument("extract_info: input must have N bits");
  }
  Bits info(code.info_set.size());
  for (std::size_t k = 0; k < code.info_set.size(); ++k) info[k] = u[code.info_set[k]];
  return info;
}

}  // namespace pb
