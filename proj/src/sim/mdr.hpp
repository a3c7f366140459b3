#pragma once

#include <cstdint>
#include <optional>

#include "core/polar_code.hpp"
#include "detect/metrics.hpp"
#include "sim/csv.hpp"

namespace pb {

// One detection method evaluated at several effort levels in the same run.
// All BP-based requests share a single BP trajectory per block, so adding
// efforts (or methods) to a run costs only the metric extraction.
struct MethodRequest {
  Method method = Method::kLs;
  std::vector<int> efforts;
  bool include_spc = true;  // Fast-SSC only
};

struct MdrConfig {
  int M = 44;                          // search-space size (candidate blocks)
  std::vector<MethodRequest> requests;
  std::vector<int> b_values;           // retained-list sizes; empty = 1..M
  double ebn0_db = 4.29;
  bool noiseless = false;
  long trials = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
  int oracle_list = 2;                 // list size of the decodability oracle
};

struct MdrSeries {
  Method method = Method::kLs;
  int effort = 0;
  bool include_spc = true;
  std::vector<long> misses;  // aligned with b_values
  std::vector<double> mdr;
};

struct MdrResult {
  std::vector<int> b_values;
  long trials = 0;
  long decodable = 0;  // trials whose true block the oracle decodes
  std::vector<MdrSeries> series;
};

// Missed-detection rate of the first stage.  Each trial drops one true
// transmission at a random position among M - 1 random filler blocks, ranks
// all M blocks by the requested metric, and counts a miss at B when the
// true block was decodable (CRC-aided SCL with `oracle_list` recovers the
// transmitted input) but ranked outside the top B.  The denominator is all
// trials.
MdrResult run_mdr(const PolarCode& code, const MdrConfig& cfg);

// CSV rows in series-major order.  The method column reads "fastssc-nospc"
// for Fast-SSC series that exclude SPC contributions.
std::vector<MdrRow> mdr_to_rows(const MdrResult& result);

// Second detection stage: CRC-aided SCL over the retained candidates.
// Returns the index (into `candidates`) whose best CRC-passing path has the
// lowest path metric; ties keep the earliest candidate.  nullopt when no
// candidate yields a CRC-passing path.
std::optional<int> second_stage(const PolarCode& code, const std::vector<Llrs>& candidates,
                                int list_size);

}  // namespace pb
