#pragma once

#include <cstdint>

#include "core/polar_code.hpp"
#include "sim/csv.hpp"
#include "sim/decoder_spec.hpp"

namespace pb {

// A point stops once it has seen both enough blocks and enough errors, or
// hits the hard block cap.  Evaluation is batched so the stopping decision
// is independent of the thread count.
struct StopRule {
  long min_blocks = 50000;
  long min_errors = 500;
  long max_blocks = 2000000;
};

struct BlerConfig {
  std::vector<double> ebn0_db;
  DecoderSpec decoder;
  StopRule stop;
  bool noiseless = false;  // smoke mode: no noise is added
  std::uint64_t seed = 1;
  int threads = 1;
};

std::vector<BlerPoint> run_bler(const PolarCode& code, const BlerConfig& cfg);

struct CalibrationResult {
  double ebn0_db = 0.0;   // operating point estimate
  BlerPoint last_point;   // measurement at the accepted point
  int evaluations = 0;
};

// Bisects Eb/N0 until the measured BLER is within rel_tol of `target` or
// the bracket shrinks below resolution_db.  Requires bler(lo) above target
// and bler(hi) below it.
CalibrationResult calibrate_operating_point(const PolarCode& code, const DecoderSpec& decoder,
                                            double target, double lo, double hi,
                                            const StopRule& stop, std::uint64_t seed,
                                            int threads, double rel_tol = 0.10,
                                            double resolution_db = 0.02);

}  // namespace pb
