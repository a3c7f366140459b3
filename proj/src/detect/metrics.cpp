#include "detect/metrics.hpp"

#include <stdexcept>

namespace pb {

const char* method_name(Method m) {
  switch (m) {
    case Method::kLs: return "ls";
    case Method::kFs: return "fs";
    case Method::kRe: return "re";
    case Method::kFastssc: return "fastssc";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "ls") return Method::kLs;
  if (name == "fs") return Method::kFs;
  if (name == "re") return Method::kRe;
  if (name == "fastssc") return Method::kFastssc;
  throw std::invalid_argument("unknown detection method: " + name +
                              " (expected ls, fs, re or fastssc)");
}

namespace {

inline bool nonneg(double v) { return v >= 0.0; }

}  // namespace

int metric_ls(const BpState& state) {
  if (state.iter < 2) {
    throw std::invalid_argument("metric_ls: needs at least two completed iterations");
  }
  int count = 0;
  for (int i = 0; i < state.N; ++i) {
    count += nonneg(state.alpha[i]) == nonneg(state.alpha_prev[i]);
  }
  return count;
}

int metric_fs(const BpState& state, const PolarCode& code) {
  if (state.N != code.N) throw std::invalid_argument("metric_fs: state/code mismatch");
  if (state.iter < 1) throw std::invalid_argument("metric_fs: run at least one iteration");
  int count = 0;
  for (int i = 0; i < code.N; ++i) {
    if (!code.is_info[i]) count += nonneg(state.alpha[i]);
  }
  return count;
}

int metric_re(const BpState& state, const PolarCode& code) {
  if (state.N != code.N) throw std::invalid_argument("metric_re: state/code mismatch");
  if (state.iter < 1) throw std::invalid_argument("metric_re: run at least one iteration");
  Bits u_hat(code.N);
  for (int i = 0; i < code.N; ++i) {
    u_hat[i] = code.is_info[i] ? hard_decision(state.alpha[i]) : 0;
  }
  polar_transform_inplace(u_hat);
  int count = 0;
  for (int i = 0; i < code.N; ++i) {
    count += u_hat[i] == hard_decision(state.beta[i]);
  }
  return count;
}

}  // namespace pb
