#include "sim/mdr.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "core/channel.hpp"
#include "core/crc16.hpp"
#include "core/rng.hpp"
#include "decode/bp.hpp"
#include "decode/fastssc.hpp"
#include "decode/scl.hpp"
#include "detect/ranking.hpp"
#include "sim/parallel.hpp"

namespace pb {

namespace {

struct SeriesSpec {
  Method method = Method::kLs;
  int effort = 0;
  bool include_spc = true;
};

struct ChunkAccum {
  std::vector<long> misses;  // flat [series][b_index]
  long decodable = 0;
};

struct TrialWorker {
  const PolarCode& code;
  const MdrConfig& cfg;
  const std::vector<SeriesSpec>& series;
  ChannelParams ch;
  int bp_max_iters;                          // 0 when no BP-based series
  std::vector<std::vector<int>> bp_extract;  // per iteration 1..bp_max: series ids
  bool any_fastssc;

  ChunkAccum run(long begin, long end) const {
    const int M = cfg.M;
    const int n_series = static_cast<int>(series.size());
    const int n_b = static_cast<int>(cfg.b_values.size());

    ChunkAccum acc;
    acc.misses.assign(static_cast<std::size_t>(n_series) * n_b, 0);

    SclDecoder oracle(code, cfg.oracle_list);
    FastSscDecoder fast(code);
    BpState bp;
    std::vector<Llrs> llrs(M);
    std::vector<std::vector<double>> values(n_series, std::vector<double>(M, 0.0));
    std::vector<MetricValue> metrics(M);

    for (long trial = begin; trial < end; ++trial) {
      auto rng = make_engine(derive_seed(cfg.seed, SeedTag::kMdrTrial,
                                         static_cast<std::uint64_t>(trial)));
      const Bits msg = random_bits(code.K, rng);
      const Bits u = assemble_message(code, msg);
      const Bits x = encode(code, u);
      const int pos = std::uniform_int_distribution<int>(0, M - 1)(rng);

      for (int m = 0; m < M; ++m) {
        if (m == pos) {
          llrs[m] = cfg.noiseless ? transmit_noiseless(x) : transmit(x, ch, rng);
        } else {
          const Bits filler = random_bits(code.N, rng);
          llrs[m] = cfg.noiseless ? transmit_noiseless(filler) : transmit(filler, ch, rng);
        }
      }

      const auto decoded = oracle.decode(llrs[pos], /*use_crc=*/true);
      const bool decodable = decoded && decoded->u_hat == u;
      if (decodable) ++acc.decodable;

      for (int m = 0; m < M; ++m) {
        if (bp_max_iters > 0) {
          bp_init(code, llrs[m], bp);
          for (int it = 1; it <= bp_max_iters; ++it) {
            bp_iterate(bp);
            for (int s : bp_extract[it]) {
              switch (series[s].method) {
                case Method::kLs: values[s][m] = metric_ls(bp); break;
                case Method::kFs: values[s][m] = metric_fs(bp, code); break;
                case Method::kRe: values[s][m] = metric_re(bp, code); break;
                case Method::kFastssc: break;
              }
            }
          }
        }
        if (any_fastssc) {
          const auto& records = fast.detect_profile(llrs[m]);
          for (int s = 0; s < n_series; ++s) {
            if (series[s].method != Method::kFastssc) continue;
            double d = 0.0;
            int visited = 0;
            for (const auto& rec : records) {
              if (rec.kind == NodeKind::kSpc && !series[s].include_spc) continue;
              d += rec.contribution;
              if (++visited == series[s].effort) break;
            }
            values[s][m] = d;
          }
        }
      }

      if (!decodable) continue;  // a non-decodable trial can never be missed

      const std::uint64_t tie_root = derive_seed(cfg.seed, SeedTag::kTieBreak,
                                                 static_cast<std::uint64_t>(trial));
      for (int s = 0; s < n_series; ++s) {
        for (int m = 0; m < M; ++m) {
          metrics[m] = {values[s][m], series[s].method, series[s].effort};
        }
        const std::uint64_t tie_seed =
            derive_seed(tie_root, SeedTag::kTieBreak, static_cast<std::uint64_t>(s));
        const int rank = rank_of(metrics, pos, tie_seed);
        for (int bi = 0; bi < n_b; ++bi) {
          if (rank >= cfg.b_values[bi]) {
            ++acc.misses[static_cast<std::size_t>(s) * n_b + bi];
          }
        }
      }
    }
    return acc;
  }
};

}  // namespace

MdrResult run_mdr(const PolarCode& code, const MdrConfig& cfg) {
  if (cfg.M < 1) throw std::invalid_argument("run_mdr: M must be positive");
  if (cfg.trials < 1) throw std::invalid_argument("run_mdr: trials must be positive");
  if (cfg.requests.empty()) throw std::invalid_argument("run_mdr: no detection methods requested");
  if (cfg.oracle_list < 1) throw std::invalid_argument("run_mdr: bad oracle list size");
  if (code.C != kCrc16Bits) {
    throw std::invalid_argument("run_mdr: the decodability oracle needs the 16-bit CRC");
  }

  std::vector<int> b_values = cfg.b_values;
  if (b_values.empty()) {
    b_values.resize(cfg.M);
    for (int i = 0; i < cfg.M; ++i) b_values[i] = i + 1;
  }
  for (int b : b_values) {
    if (b < 1 || b > cfg.M) {
      throw std::invalid_argument("run_mdr: B values must lie in [1, M]");
    }
  }

  FastSscTree tree = fastssc_build_tree(code);
  std::vector<SeriesSpec> series;
  int bp_max = 0;
  bool any_fastssc = false;
  for (const auto& req : cfg.requests) {
    if (req.efforts.empty()) {
      throw std::invalid_argument("run_mdr: a method request has no effort values");
    }
    for (int e : req.efforts) {
      SeriesSpec s{req.method, e, req.include_spc};
      switch (req.method) {
        case Method::kLs:
          if (e < 2) {
            throw std::invalid_argument(
                "run_mdr: sign-stability needs at least two iterations (effort >= 2)");
          }
          bp_max = std::max(bp_max, e);
          break;
        case Method::kFs:
        case Method::kRe:
          if (e < 1) throw std::invalid_argument("run_mdr: efforts must be positive");
          bp_max = std::max(bp_max, e);
          break;
        case Method::kFastssc: {
          const int avail = tree.contributing_leaves(req.include_spc);
          if (e < 1 || e > avail) {
            throw std::invalid_argument(
                "run_mdr: Fast-SSC effort t must lie in [1, " + std::to_string(avail) +
                "] for this code" + (req.include_spc ? "" : " without SPC leaves"));
          }
          any_fastssc = true;
          break;
        }
      }
      series.push_back(s);
    }
  }

  MdrConfig cfg_resolved = cfg;
  cfg_resolved.b_values = b_values;

  TrialWorker worker{code,   cfg_resolved, series, make_channel(cfg.ebn0_db, code.K, code.N),
                     bp_max, {},           any_fastssc};
  worker.bp_extract.assign(bp_max + 1, {});
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (series[s].method != Method::kFastssc) {
      worker.bp_extract[series[s].effort].push_back(static_cast<int>(s));
    }
  }

  MdrResult result;
  result.b_values = b_values;
  result.trials = cfg.trials;
  const int n_b = static_cast<int>(b_values.size());
  result.series.resize(series.size());
  for (std::size_t s = 0; s < series.size(); ++s) {
    result.series[s].method = series[s].method;
    result.series[s].effort = series[s].effort;
    result.series[s].include_spc = series[s].include_spc;
    result.series[s].misses.assign(n_b, 0);
  }

  // Waves exist only for progress reporting; every trial owns its seed, so
  // the split has no effect on the counts.
  const long wave = std::max(1000L, cfg.trials / 20);
  for (long done = 0; done < cfg.trials; ) {
    const long stop = std::min(cfg.trials, done + wave);
    const auto chunks = parallel_chunks(done, stop, cfg.threads,
                                        [&worker](long b, long e) { return worker.run(b, e); });
    for (const auto& chunk : chunks) {
      result.decodable += chunk.decodable;
      for (std::size_t s = 0; s < series.size(); ++s) {
        for (int bi = 0; bi < n_b; ++bi) {
          result.series[s].misses[bi] += chunk.misses[s * n_b + bi];
        }
      }
    }
    done = stop;
    std::cerr << "mdr: " << done << "/" << cfg.trials << " trials\n";
  }
  for (auto& s : result.series) {
    s.mdr.resize(n_b);
    for (int bi = 0; bi < n_b; ++bi) {
      s.mdr[bi] = static_cast<double>(s.misses[bi]) / static_cast<double>(cfg.trials);
    }
  }
  return result;
}

std::vector<MdrRow> mdr_to_rows(const MdrResult& result) {
  std::vector<MdrRow> rows;
  rows.reserve(result.series.size() * result.b_values.size());
  for (const auto& s : result.series) {
    std::string name = method_name(s.method);
    if (s.method == Method::kFastssc && !s.include_spc) name += "-nospc";
    for (std::size_t bi = 0; bi < result.b_values.size(); ++bi) {
      MdrRow row;
      row.method = name;
      row.effort = s.effort;
      row.b = result.b_values[bi];
      row.mdr = s.mdr[bi];
      row.misses = s.misses[bi];
      row.trials = result.trials;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::optional<int> second_stage(const PolarCode& code, const std::vector<Llrs>& candidates,
                                int list_size) {
  if (candidates.empty()) return std::nullopt;
  SclDecoder dec(code, list_size);
  std::optional<int> best;
  double best_pm = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto res = dec.decode(candidates[i], /*use_crc=*/true);
    if (!res) continue;
    if (!best || res->path_metric < best_pm) {
      best = static_cast<int>(i);
      best_pm = res->path_metric;
    }
  }
  return best;
}

}  // namespace pb
