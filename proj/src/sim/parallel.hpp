#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace pb {

// Runs fn(begin, end) over disjoint contiguous chunks of [begin, end) and
// returns the per-chunk results in chunk order.  Results must not depend on
// the chunking for callers that want thread-count invariance; our workloads
// guarantee that by seeding every item independently.
template <typename Fn>
auto parallel_chunks(long begin, long end, int threads, Fn fn)
    -> std::vector<std::invoke_result_t<Fn&, long, long>> {
  using R = std::invoke_result_t<Fn&, long, long>;
  const long total = end - begin;
  std::vector<R> results;
  if (total <= 0) return results;
  if (threads < 1) threads = 1;
  const int workers = static_cast<int>(std::min<long>(threads, total));
  if (workers == 1) {
    results.push_back(fn(begin, end));
    return results;
  }

  results.resize(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long base = total / workers;
  const long extra = total % workers;
  long cursor = begin;
  for (int w = 0; w < workers; ++w) {
    const long len = base + (w < extra ? 1 : 0);
    const long b = cursor;
    const long e = cursor + len;
    cursor = e;
    pool.emplace_back([&results, &errors, &fn, w, b, e]() {
      try {
        results[w] = fn(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

}  // namespace pb
