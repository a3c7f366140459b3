#include "decode/sc.hpp"

#include <stdexcept>

namespace pb {

ScDecoder::ScDecoder(const PolarCode& code) : code_(&code) {
  alpha_.assign(code.n + 1, Llrs(code.N, 0.0));
  beta_.assign(code.n + 1, Bits(code.N, 0));
  u_hat_.assign(code.N, 0);
}

const Bits& ScDecoder::decode(const Llrs& llrs) {
  if (static_cast<int>(llrs.size()) != code_->N) {
    throw std::invalid_argument("sc_decode: LLR vector must have N entries");
  }
  alpha_[0] = llrs;
  recurse(0, 0);
  return u_hat_;
}

void ScDecoder::recurse(int level, int start) {
  const int size = code_->N >> level;
  if (size == 1) {
    std::uint8_t bit = 0;
    if (code_->is_info[start]) bit = hard_decision(alpha_[level][start]);
    beta_[level][start] = bit;
    u_hat_[start] = bit;
    return;
  }
  const int half = size / 2;
  const Llrs& a = alpha_[level];
  Llrs& child = alpha_[level + 1];

  for (int k = 0; k < half; ++k) {
    child[start + k] = f_minsum(a[start + k], a[start + half + k]);
  }
  recurse(level + 1, start);

  const Bits& left_beta = beta_[level + 1];
  for (int k = 0; k < half; ++k) {
    child[start + half + k] = g_update(a[start + k], a[start + half + k], left_beta[start + k]);
  }
  recurse(level + 1, start + half);

  Bits& b = beta_[level];
  const Bits& cb = beta_[level + 1];
  for (int k = 0; k < half; ++k) {
    b[start + k] = static_cast<std::uint8_t>(cb[start + k] ^ cb[start + half + k]);
    b[start + half + k] = cb[start + half + k];
  }
}

Bits sc_decode(const PolarCode& code, const Llrs& llrs) {
  ScDecoder dec(code);
  return dec.decode(llrs);
}

}  // namespace pb
