#include "sim/bler.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "core/channel.hpp"
#include "core/crc16.hpp"
#include "core/rng.hpp"
#include "decode/bp.hpp"
#include "decode/sc.hpp"
#include "decode/scl.hpp"
#include "sim/parallel.hpp"

namespace pb {

namespace {

// Fixed batch size keeps the stopping rule independent of the thread count.
constexpr long kBatch = 8192;

struct PointWorker {
  const PolarCode& code;
  const BlerConfig& cfg;
  ChannelParams ch;
  std::uint64_t point_root;

  Bits make_input(const Bits& msg) const {
    if (code.C == kCrc16Bits) return assemble_message(code, msg);
    if (code.C != 0) {
      throw std::invalid_argument("run_bler: codes must carry either no CRC or the 16-bit CRC");
    }
    Bits u(code.N, 0);
    for (int k = 0; k < code.K; ++k) u[code.info_set[k]] = msg[k];
    return u;
  }

  long count_errors(long begin, long end) const {
    ScDecoder sc(code);
    BpState bp;
    std::optional<SclDecoder> scl;
    if (cfg.decoder.kind == DecoderSpec::Kind::kScl) {
      scl.emplace(code, cfg.decoder.list_size);
    }

    long errors = 0;
    for (long blk = begin; blk < end; ++blk) {
      auto rng = make_engine(derive_seed(point_root, SeedTag::kBlerBlock,
                                         static_cast<std::uint64_t>(blk)));
      const Bits msg = random_bits(code.K, rng);
      const Bits u = make_input(msg);
      const Bits x = encode(code, u);
      const Llrs llrs = cfg.noiseless ? transmit_noiseless(x) : transmit(x, ch, rng);

      bool error = false;
      switch (cfg.decoder.kind) {
        case DecoderSpec::Kind::kSc:
          error = sc.decode(llrs) != u;
          break;
        case DecoderSpec::Kind::kBp: {
          bp_init(code, llrs, bp);
          for (int i = 0; i < cfg.decoder.iters; ++i) bp_iterate(bp);
          error = bp_decode(bp, code) != u;
          break;
        }
        case DecoderSpec::Kind::kScl: {
          auto res = scl->decode(llrs, /*use_crc=*/true);
          error = !res || res->u_hat != u;
          break;
        }
      }
      errors += error;
    }
    return errors;
  }
};

BlerPoint run_point(const PolarCode& code, const BlerConfig& cfg, double ebn0_db) {
  const std::uint64_t point_root = splitmix64(
      cfg.seed ^ splitmix64(static_cast<std::uint64_t>(std::llround(ebn0_db * 1000.0))));
  PointWorker worker{code, cfg, make_channel(ebn0_db, code.K, code.N), point_root};

  long blocks = 0;
  long errors = 0;
  while (true) {
    const long batch = std::min(kBatch, cfg.stop.max_blocks - blocks);
    if (batch <= 0) break;
    const auto counts =
        parallel_chunks(blocks, blocks + batch, cfg.threads,
                        [&worker](long b, long e) { return worker.count_errors(b, e); });
    for (long c : counts) errors += c;
    blocks += batch;
    if (blocks >= cfg.stop.min_blocks && errors >= cfg.stop.min_errors) break;
    if (blocks >= cfg.stop.max_blocks) break;
  }

  BlerPoint point;
  point.ebn0_db = ebn0_db;
  point.errors = errors;
  point.blocks = blocks;
  point.fer = blocks > 0 ? static_cast<double>(errors) / static_cast<double>(blocks) : 0.0;
  return point;
}

}  // namespace

std::vector<BlerPoint> run_bler(const PolarCode& code, const BlerConfig& cfg) {
  if (cfg.ebn0_db.empty()) throw std::invalid_argument("run_bler: no Eb/N0 points");
  if (cfg.stop.min_blocks < 1 || cfg.stop.max_blocks < cfg.stop.min_blocks) {
    throw std::invalid_argument("run_bler: bad stop rule");
  }
  if (cfg.decoder.kind == DecoderSpec::Kind::kBp && cfg.decoder.iters < 1) {
    throw std::invalid_argument("run_bler: BP needs at least one iteration");
  }
  std::vector<BlerPoint> points;
  points.reserve(cfg.ebn0_db.size());
  for (double x : cfg.ebn0_db) {
    points.push_back(run_point(code, cfg, x));
    const BlerPoint& p = points.back();
    std::cerr << "bler " << cfg.decoder.token << " ebn0=" << p.ebn0_db << " fer=" << p.fer
              << " errors=" << p.errors << " blocks=" << p.blocks << "\n";
  }
  return points;
}

CalibrationResult calibrate_operating_point(const PolarCode& code, const DecoderSpec& decoder,
                                            double target, double lo, double hi,
                                            const StopRule& stop, std::uint64_t seed,
                                            int threads, double rel_tol,
                                            double resolution_db) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument("calibrate: target BLER must be in (0, 1)");
  }
  if (!(lo < hi)) throw std::invalid_argument("calibrate: need lo < hi");
  if (!(resolution_db > 0.0)) throw std::invalid_argument("calibrate: bad resolution");

  BlerConfig cfg;
  cfg.decoder = decoder;
  cfg.stop = stop;
  cfg.seed = seed;
  cfg.threads = threads;

  int evals = 0;
  auto eval = [&](double x) {
    cfg.ebn0_db = {x};
    ++evals;
    return run_bler(code, cfg)[0];
  };

  const BlerPoint at_lo = eval(lo);
  if (at_lo.fer <= target) {
    throw std::invalid_argument(
        "calibrate: BLER at the lower bracket edge is already at or below the target; "
        "the operating point lies outside [lo, hi]");
  }
  const BlerPoint at_hi = eval(hi);
  if (at_hi.fer >= target) {
    throw std::invalid_argument(
        "calibrate: BLER at the upper bracket edge is still above the target; "
        "the operating point lies outside [lo, hi]");
  }

  double a = lo;
  double b = hi;
  BlerPoint last = at_hi;
  while (b - a > resolution_db) {
    const double mid = 0.5 * (a + b);
    last = eval(mid);
    if (std::abs(last.fer - target) <= rel_tol * target) {
      return {mid, last, evals};
    }
    if (last.fer > target) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return {0.5 * (a + b), last, evals};
}

}  // namespace pb
