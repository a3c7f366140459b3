#include "detect/ranking.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/rng.hpp"

namespace pb {

std::vector<int> rank_all(const std::vector<MetricValue>& metrics, std::uint64_t tie_seed) {
  if (metrics.empty()) throw std::invalid_argument("rank: empty candidate list");
  for (const auto& m : metrics) {
    if (m.method != metrics[0].method || m.effort != metrics[0].effort) {
      throw std::invalid_argument("rank: candidate metrics mix methods or efforts");
    }
  }
  std::vector<int> order(metrics.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

  auto rng = make_engine(tie_seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return metrics[a].value > metrics[b].value; });
  return order;
}

std::vector<int> rank_candidates(const std::vector<MetricValue>& metrics, int b,
                                 std::uint64_t tie_seed) {
  if (b < 0) throw std::invalid_argument("rank: B must be nonnegative");
  std::vector<int> order = rank_all(metrics, tie_seed);
  if (static_cast<std::size_t>(b) < order.size()) order.resize(b);
  return order;
}

int rank_of(const std::vector<MetricValue>& metrics, int index, std::uint64_t tie_seed) {
  if (index < 0 || static_cast<std::size_t>(index) >= metrics.size()) {
    throw std::invalid_argument("rank_of: index out of range");
  }
  const std::vector<int> order = rank_all(metrics, tie_seed);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == index) return static_cast<int>(i);
  }
  return -1;  // unreachable
}

}  // namespace pb
