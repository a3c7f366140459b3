#include "decode/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/channel.hpp"

namespace pb {

namespace {

constexpr float kSat = static_cast<float>(kLlrSaturation);
constexpr float kBpScale = 0.9375f;

inline float clamp_msg(float v) { return std::clamp(v, -kSat, kSat); }

// Scaled min-sum check update.
inline float f9(float x, float y) {
  const float m = std::min(std::fabs(x), std::fabs(y));
  return (std::signbit(x) != std::signbit(y)) ? -kBpScale * m : kBpScale * m;
}

}  // namespace

void bp_init(const PolarCode& code, const Llrs& llrs, BpState& state) {
  if (static_cast<int>(llrs.size()) != code.N) {
    throw std::invalid_argument("bp_init: LLR vector must have N entries");
  }
  state.n = code.n;
  state.N = code.N;
  state.iter = 0;
  const std::size_t rows = static_cast<std::size_t>(code.n + 1) * code.N;
  state.left.assign(rows, 0.0f);
  state.right.assign(rows, 0.0f);

  float* ln = state.left.data() + static_cast<std::size_t>(code.n) * code.N;
  for (int i = 0; i < code.N; ++i) ln[i] = clamp_msg(static_cast<float>(llrs[i]));

  float* r0 = state.right.data();
  for (int i = 0; i < code.N; ++i) r0[i] = code.is_info[i] ? 0.0f : kSat;

  state.alpha.assign(code.N, 0.0);
  state.alpha_prev.assign(code.N, 0.0);
  state.beta.assign(code.N, 0.0);
}

BpState bp_init(const PolarCode& code, const Llrs& llrs) {
  BpState st;
  bp_init(code, llrs, st);
  return st;
}

void bp_iterate(BpState& state) {
  const int n = state.n;
  const int N = state.N;
  float* L = state.left.data();
  float* R = state.right.data();

  // Leftward pass: stage s writes column s from column s+1.
  for (int s = n - 1; s >= 0; --s) {
    float* ls = L + static_cast<std::size_t>(s) * N;
    const float* lu = L + static_cast<std::size_t>(s + 1) * N;
    const float* rs = R + static_cast<std::size_t>(s) * N;
    const int stride = 1 << s;
    const int pair = stride << 1;
    for (int base = 0; base < N; base += pair) {
      for (int a = base; a < base + stride; ++a) {
        const int b = a + stride;
        ls[a] = clamp_msg(f9(lu[a], lu[b] + rs[b]));
        ls[b] = clamp_msg(lu[b] + f9(lu[a], rs[a]));
      }
    }
  }

  // Rightward pass: stage s writes column s+1 from column s.
  for (int s = 0; s < n; ++s) {
    const float* lu = L + static_cast<std::size_t>(s + 1) * N;
    const float* rs = R + static_cast<std::size_t>(s) * N;
    float* ru = R + static_cast<std::size_t>(s + 1) * N;
    const int stride = 1 << s;
    const int pair = stride << 1;
    for (int base = 0; base < N; base += pair) {
      for (int a = base; a < base + stride; ++a) {
        const int b = a + stride;
        ru[a] = clamp_msg(f9(lu[b] + rs[b], rs[a]));
        ru[b] = clamp_msg(rs[b] + f9(lu[a], rs[a]));
      }
    }
  }

  ++state.iter;
  state.alpha_prev.swap(state.alpha);
  const float* l0 = L;
  const float* lnr = L + static_cast<std::size_t>(n) * N;
  const float* rnr = R + static_cast<std::size_t>(n) * N;
  for (int i = 0; i < N; ++i) {
    state.alpha[i] = static_cast<double>(l0[i]);
    state.beta[i] = static_cast<double>(lnr[i]) + static_cast<double>(rnr[i]);
  }
}

Bits bp_decode(const BpState& state, const PolarCode& code) {
  if (state.N != code.N) throw std::invalid_argument("bp_decode: state/code mismatch");
  if (state.iter < 1) throw std::invalid_argument("bp_decode: run at least one iteration");
  Bits u_hat(code.N, 0);
  for (int i = 0; i < code.N; ++i) {
    u_hat[i] = code.is_info[i] ? hard_decision(state.alpha[i]) : 0;
  }
  return u_hat;
}

}  // namespace pb
