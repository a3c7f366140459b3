#pragma once

#include <string>

#include "core/polar_code.hpp"
#include "decode/bp.hpp"

namespace pb {

enum class Method { kLs, kFs, kRe, kFastssc };

const char* method_name(Method m);
Method parse_method(const std::string& name);

// One candidate's detection metric.  Higher means more likely to be a real
// transmission.  Lists passed to the ranking stage must be homogeneous in
// method and effort.
struct MetricValue {
  double value = 0.0;
  Method method = Method::kLs;
  int effort = 0;  // BP iterations or Fast-SSC contributing leaves
};

// Sign-stability count: positions whose u-side extrinsic LLR kept its sign
// across the last two iterations.  Needs at least two completed iterations.
int metric_ls(const BpState& state);

// Frozen-support count: frozen positions whose extrinsic LLR agrees with
// the zero prior.
int metric_fs(const BpState& state, const PolarCode& code);

// Re-encoding agreement: harden the u side (frozen forced to zero),
// re-encode, and count codeword positions agreeing with the hardened
// x-side beliefs.
int metric_re(const BpState& state, const PolarCode& code);

}  // namespace pb
