#pragma once

#include <cstdint>

#include "detect/metrics.hpp"

namespace pb {

// Candidate indices ordered by metric, best first.  Ties are broken
// uniformly at random by `tie_seed`: candidates are passed through a seeded
// random permutation before a stable sort on the metric value, so equal
// values appear in permuted order.  Throws if the list mixes methods or
// efforts.
std::vector<int> rank_all(const std::vector<MetricValue>& metrics, std::uint64_t tie_seed);

// First min(B, M) entries of rank_all: the candidates a second stage would
// retain.  By construction the retained set at B is a prefix of the set at
// B + 1.
std::vector<int> rank_candidates(const std::vector<MetricValue>& metrics, int b,
                                 std::uint64_t tie_seed);

// Position of candidate `index` in rank_all (0-based).
int rank_of(const std::vector<MetricValue>& metrics, int index, std::uint64_t tie_seed);

}  // namespace pb
