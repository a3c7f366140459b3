// Acceptance harness: checks the headline numbers the library is meant to
// reproduce, one line per criterion, nonzero exit when anything fails.
// Monte-Carlo settings here are heavier than the unit tests; expect several
// minutes of runtime.  Progress goes to stderr, verdicts to stdout.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core/channel.hpp"
#include "core/crc16.hpp"
#include "core/polar_code.hpp"
#include "core/rng.hpp"
#include "decode/bp.hpp"
#include "decode/fastssc.hpp"
#include "decode/sc.hpp"
#include "decode/scl.hpp"
#include "detect/metrics.hpp"
#include "detect/ranking.hpp"
#include "sim/bler.hpp"
#include "sim/csv.hpp"
#include "sim/mdr.hpp"

using namespace pb;

namespace {

struct Reporter {
  int failures = 0;
  void line(int id, bool ok, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
  }
};

int pick_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::string fd(double v) { return format_double(v); }

// Round to 3 decimals for readable dB values in the verdict lines.
std::string fd3(double v) { return format_double(std::round(v * 1000.0) / 1000.0); }

double sigma1(double p, long n) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// criterion 1: SCL(16) against an exhaustive ML oracle on a 16-codeword code

double ml_cost(const Llrs& llrs, const Bits& x) {
  double c = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint8_t hard = llrs[i] >= 0.0 ? 0 : 1;
    if (hard != x[i]) c += std::abs(llrs[i]);
  }
  return c;
}

void criterion1(Reporter& rep) {
  const PolarCode small = build_code(16, 4, 0);
  const ChannelParams ch = make_channel(1.0, small.K, small.N);

  std::vector<Bits> cand_u(16), cand_x(16);
  for (int m = 0; m < 16; ++m) {
    Bits u(16, 0);
    for (int j = 0; j < 4; ++j) u[small.info_set[j]] = static_cast<std::uint8_t>((m >> j) & 1);
    cand_u[m] = u;
    cand_x[m] = encode(small, u);
  }

  SclDecoder scl(small, 16);
  const long blocks = 1000;
  long agree = 0, ties = 0;
  for (long b = 0; b < blocks; ++b) {
    auto rng = make_engine(derive_seed(7001, SeedTag::kBlerBlock, static_cast<std::uint64_t>(b)));
    const int m = static_cast<int>(rng() & 15u);
    const Llrs llrs = transmit(cand_x[m], ch, rng);

    int best = 0;
    double best_cost = ml_cost(llrs, cand_x[0]);
    double second = 1e300;
    for (int c = 1; c < 16; ++c) {
      const double cost = ml_cost(llrs, cand_x[c]);
      if (cost < best_cost) {
        second = best_cost;
        best_cost = cost;
        best = c;
      } else if (cost < second) {
        second = cost;
      }
    }
    if (second - best_cost < 1e-9) {  // degenerate tie; measure zero
      ++ties;
      ++agree;
      continue;
    }
    const auto path = scl.decode(llrs, false);
    if (path && path->u_hat == cand_u[best]) ++agree;
  }
  std::ostringstream d;
  d << agree << "/" << blocks << " blocks match the exhaustive ML oracle";
  if (ties > 0) d << " (" << ties << " degenerate ties skipped)";
  rep.line(1, agree == blocks, d.str());
}

// ---------------------------------------------------------------------------
// criterion 2: Fast-SSC bit-exact against SC

void criterion2(Reporter& rep, const PolarCode& code) {
  const ChannelParams ch = make_channel(4.25, code.K, code.N);
  ScDecoder sc(code);
  FastSscDecoder fast(code);
  const long blocks = 10000;
  long mismatches = 0;
  for (long b = 0; b < blocks; ++b) {
    auto rng = make_engine(derive_seed(7002, SeedTag::kBlerBlock, static_cast<std::uint64_t>(b)));
    const Bits msg = random_bits(code.K, rng);
    const Bits x = encode(code, assemble_message(code, msg));
    const Llrs llrs = transmit(x, ch, rng);
    const Bits u_sc = sc.decode(llrs);
    if (fast.decode(llrs) != u_sc) ++mismatches;
  }
  std::ostringstream d;
  d << blocks << " blocks, " << mismatches << " mismatches";
  rep.line(2, mismatches == 0, d.str());
}

// ---------------------------------------------------------------------------
// criterion 3: BLER curve relationships via calibrated operating points

struct Op {
  bool ok = false;
  double db = 0.0;
  std::string err;
};

Op calibrate(const PolarCode& code, const std::string& token, double target, double lo, double hi,
             long max_blocks, int threads) {
  Op op;
  try {
    const StopRule stop{20000, 250, max_blocks};
    const CalibrationResult r = calibrate_operating_point(code, DecoderSpec::parse(token), target,
                                                          lo, hi, stop, 1, threads);
    op.ok = true;
    op.db = r.ebn0_db;
    std::cerr << "calibrated " << token << " @ " << fd(target) << ": " << fd3(r.ebn0_db) << " dB ("
              << r.evaluations << " evaluations)\n";
  } catch (const std::exception& e) {
    op.err = e.what();
    std::cerr << "calibration failed for " << token << " @ " << fd(target) << ": " << e.what()
              << "\n";
  }
  return op;
}

double fer_at(const PolarCode& code, const std::string& token, double ebn0_db,
              const StopRule& stop, int threads) {
  BlerConfig cfg;
  cfg.ebn0_db = {ebn0_db};
  cfg.decoder = DecoderSpec::parse(token);
  cfg.stop = stop;
  cfg.seed = 1;
  cfg.threads = threads;
  return run_bler(code, cfg).front().fer;
}

void criterion3(Reporter& rep, const PolarCode& code, const Op& scl2_2, const Op& sc_2,
                const Op& bp15_2, const Op& bp50_2, const Op& sc_3, const Op& scl2_3,
                const Op& scl4_3, int threads) {
  std::ostringstream d;
  bool ok = true;

  const std::array<std::pair<const Op*, const char*>, 7> needed{{{&scl2_2, "scl2@1e-2"},
                                                                 {&sc_2, "sc@1e-2"},
                                                                 {&bp15_2, "bp15@1e-2"},
                                                                 {&bp50_2, "bp50@1e-2"},
                                                                 {&sc_3, "sc@1e-3"},
                                                                 {&scl2_3, "scl2@1e-3"},
                                                                 {&scl4_3, "scl4@1e-3"}}};
  for (const auto& [op, name] : needed) {
    if (!op->ok) {
      rep.line(3, false, std::string("calibration failed for ") + name + ": " + op->err);
      return;
    }
  }

  // (a) SC block-error rate at the CA-SCL L=2 operating point.
  const double sc_fer = fer_at(code, "sc", scl2_2.db, StopRule{20000, 250, 600000}, threads);
  const bool a = sc_fer >= 0.05 / 1.5 && sc_fer <= 0.05 * 1.5;
  ok = ok && a;
  d << "sc fer at " << fd3(scl2_2.db) << " dB = " << fd(sc_fer) << " (want 0.033..0.075)";

  // (b) BP I=15 within 0.15 dB of SC at 1e-2.
  const double shift = std::abs(bp15_2.db - sc_2.db);
  const bool b = shift <= 0.15;
  ok = ok && b;
  d << "; |bp15-sc| = " << fd3(shift) << " dB (want <= 0.15)";

  // (c) BP I=50 gain over I=15 at 1e-2: 0.25 +/- 0.15 dB.
  const double bp_gain = bp15_2.db - bp50_2.db;
  const bool c = bp_gain >= 0.10 && bp_gain <= 0.40;
  ok = ok && c;
  d << "; bp50 gain = " << fd3(bp_gain) << " dB (want 0.10..0.40)";

  // (d) CA-SCL gains over SC at 1e-3: 0.8 and 1.5 dB, +/- 0.25.
  const double g2 = sc_3.db - scl2_3.db;
  const double g4 = sc_3.db - scl4_3.db;
  const bool e = g2 >= 0.55 && g2 <= 1.05 && g4 >= 1.25 && g4 <= 1.75;
  ok = ok && e;
  d << "; scl2/scl4 gains at 1e-3 = " << fd3(g2) << "/" << fd3(g4)
    << " dB (want 0.55..1.05 / 1.25..1.75)";

  rep.line(3, ok, d.str());
}

// ---------------------------------------------------------------------------
// criteria 4-9: one big MDR run shared by every detection check

const MdrSeries* find_series(const MdrResult& r, Method m, int effort, bool include_spc = true) {
  for (const auto& s : r.series) {
    if (s.method == m && s.effort == effort &&
        (m != Method::kFastssc || s.include_spc == include_spc)) {
      return &s;
    }
  }
  return nullptr;
}

double at_b(const MdrSeries& s, int b) { return s.mdr[static_cast<std::size_t>(b - 1)]; }

void criterion4(Reporter& rep, const MdrResult& r) {
  bool ok = true;
  std::string bad;
  for (const auto& s : r.series) {
    for (std::size_t i = 1; i < s.mdr.size(); ++i) {
      if (s.misses[i] > s.misses[i - 1]) {
        ok = false;
        bad = std::string(method_name(s.method)) + " effort " + std::to_string(s.effort) +
              " increases at B=" + std::to_string(r.b_values[i]);
      }
    }
    if (s.misses.back() != 0) {
      ok = false;
      bad = std::string(method_name(s.method)) + " effort " + std::to_string(s.effort) +
            " has MDR(44) = " + fd(s.mdr.back());
    }
  }
  std::ostringstream d;
  if (ok) {
    d << "all " << r.series.size() << " series non-increasing in B with MDR(44) = 0";
  } else {
    d << bad;
  }
  rep.line(4, ok, d.str());
}

int required_b(const MdrSeries& s, const MdrResult& r, double target) {
  for (std::size_t i = 0; i < s.mdr.size(); ++i) {
    if (s.mdr[i] <= target) return r.b_values[i];
  }
  return -1;
}

void criterion5(Reporter& rep, const MdrResult& r) {
  const std::array<std::pair<int, int>, 3> expect{{{2, 40}, {3, 20}, {4, 6}}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& [iters, b_expect] : expect) {
    const MdrSeries* s = find_series(r, Method::kLs, iters);
    const int b_meas = required_b(*s, r, 0.1);
    const bool b_ok = b_meas > 0 && std::abs(b_meas - b_expect) <= 0.3 * b_expect + 1e-9;
    const double p_at = at_b(*s, b_expect);
    const bool sigma_ok = std::abs(p_at - 0.1) <= 3.0 * sigma1(p_at, r.trials);
    ok = ok && (b_ok || sigma_ok);
    if (iters != 2) d << "; ";
    d << "ls I=" << iters << ": B*(0.1) = " << b_meas << " (expect ~" << b_expect << ", mdr at "
      << b_expect << " = " << fd(p_at) << ")";
  }
  rep.line(5, ok, d.str());
}

void criterion6(Reporter& rep, const MdrResult& r) {
  struct Check {
    Method method;
    int effort;
    int b;
  };
  const std::array<Check, 7> checks{{{Method::kLs, 5, 33},
                                     {Method::kFs, 3, 33},
                                     {Method::kRe, 7, 33},
                                     {Method::kLs, 15, 22},
                                     {Method::kFs, 15, 22},
                                     {Method::kRe, 15, 22},
                                     {Method::kFs, 15, 11}}};
  bool ok = true;
  std::ostringstream d;
  bool first = true;
  for (const auto& c : checks) {
    const double p = at_b(*find_series(r, c.method, c.effort), c.b);
    ok = ok && p <= 0.015;
    if (!first) d << "; ";
    first = false;
    d << method_name(c.method) << " I=" << c.effort << " B=" << c.b << ": " << fd(p);
  }
  d << " (want each <= 0.015)";
  rep.line(6, ok, d.str());
}

void criterion7(Reporter& rep, const MdrResult& r) {
  const double p15 = at_b(*find_series(r, Method::kRe, 15), 4);
  const double p50 = at_b(*find_series(r, Method::kRe, 50), 4);
  const bool ok = p15 >= 0.01 && p15 <= 0.04 && p50 >= 0.0015 && p50 <= 0.01 && p50 <= p15 / 3.0;
  std::ostringstream d;
  d << "re B=4: I=15 " << fd(p15) << " (want 0.01..0.04), I=50 " << fd(p50)
    << " (want 0.0015..0.01 and <= I=15 / 3)";
  rep.line(7, ok, d.str());
}

void print_nospc_curve(const MdrResult& r, int cnt, int b) {
  std::cerr << "no-SPC MDR at B=" << b << ":";
  for (int t = 1; t <= cnt; ++t) {
    std::cerr << " t" << t << "=" << fd(at_b(*find_series(r, Method::kFastssc, t, false), b));
  }
  std::cerr << "\n";
}

void criterion8(Reporter& rep, const MdrResult& r, int cnt_nospc) {
  // Thresholds are quoted against a 14-leaf decomposition; rescale if ours
  // differs (it should not).
  const auto scale_t = [&](int t) {
    const int s = static_cast<int>(std::lround(t * cnt_nospc / 14.0));
    return std::clamp(s, 1, cnt_nospc);
  };

  struct Check {
    int b;
    int t_from;
    int t_to;
    double thr;
  };
  const std::array<Check, 3> checks{{{4, scale_t(12), cnt_nospc, 0.015},
                                     {33, scale_t(6), cnt_nospc, 0.002},
                                     {32, scale_t(3), scale_t(3), 0.015}}};

  bool strict = true;
  bool within_sigma = true;
  std::ostringstream d;
  bool first = true;
  for (const auto& c : checks) {
    double worst = -1.0;
    int worst_t = c.t_from;
    for (int t = c.t_from; t <= c.t_to; ++t) {
      const double p = at_b(*find_series(r, Method::kFastssc, t, false), c.b);
      if (p > worst) {
        worst = p;
        worst_t = t;
      }
      if (p > c.thr) {
        strict = false;
        if (p - 3.0 * sigma1(p, r.trials) > c.thr) within_sigma = false;
      }
    }
    if (!first) d << "; ";
    first = false;
    d << "B=" << c.b << " t>=" << c.t_from << ": worst " << fd(worst) << " at t=" << worst_t
      << " (want <= " << fd(c.thr) << ")";
  }
  if (!strict) {
    // Escape hatch: dump the measured curves next to the quoted thresholds.
    for (int b : {4, 33, 32}) print_nospc_curve(r, cnt_nospc, b);
    d << (within_sigma ? "; above threshold but within 3 sigma, curves on stderr"
                       : "; outside 3 sigma, curves on stderr");
  }
  rep.line(8, strict || within_sigma, d.str());
}

void criterion9(Reporter& rep, const MdrResult& r, const FastSscTree& tree, int cnt_nospc) {
  // First contributing leaf that is an SPC node, counted in visit order.
  int first_spc = -1, seen = 0;
  for (int leaf : tree.leaves) {
    const NodeKind kind = tree.nodes[static_cast<std::size_t>(leaf)].kind;
    if (kind == NodeKind::kRate1) continue;
    ++seen;
    if (kind == NodeKind::kSpc) {
      first_spc = seen;
      break;
    }
  }
  if (first_spc < 2) {
    rep.line(9, false, "no usable SPC step in the decomposition");
    return;
  }

  const MdrSeries* prev = find_series(r, Method::kFastssc, first_spc - 1, true);
  const MdrSeries* curr = find_series(r, Method::kFastssc, first_spc, true);
  double best_z = 0.0;
  int best_b = 0;
  for (int b = 1; b <= static_cast<int>(r.b_values.size()); ++b) {
    const double p1 = at_b(*prev, b);
    const double p2 = at_b(*curr, b);
    const double sig = std::sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / static_cast<double>(r.trials));
    if (sig > 0.0) {
      const double z = (p2 - p1) / sig;
      if (z > best_z) {
        best_z = z;
        best_b = b;
      }
    }
  }
  const bool crossover = best_z > 3.0;

  bool monotone = true;
  std::string viol;
  for (int t = 1; t < cnt_nospc; ++t) {
    const MdrSeries* a = find_series(r, Method::kFastssc, t, false);
    const MdrSeries* b2 = find_series(r, Method::kFastssc, t + 1, false);
    for (int b = 1; b <= static_cast<int>(r.b_values.size()); ++b) {
      const double p1 = at_b(*a, b);
      const double p2 = at_b(*b2, b);
      const double sig =
          std::sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / static_cast<double>(r.trials));
      if (p2 > p1 + 3.0 * sig) {
        monotone = false;
        viol = "no-SPC t=" + std::to_string(t) + "->" + std::to_string(t + 1) +
               " rises at B=" + std::to_string(b);
      }
    }
  }

  std::ostringstream d;
  d << "SPC step t=" << (first_spc - 1) << "->" << first_spc << ": max excess z = " << fd3(best_z)
    << " sigma at B=" << best_b << " (want > 3)";
  d << "; no-SPC curves " << (monotone ? "non-increasing within 3 sigma" : viol);
  rep.line(9, crossover && monotone, d.str());
}

// ---------------------------------------------------------------------------
// criterion 10: invariant suite

std::uint16_t table_crc(const std::uint8_t* data, std::size_t len) {
  static const std::array<std::uint16_t, 256> table = [] {
    std::array<std::uint16_t, 256> t{};
    for (int b = 0; b < 256; ++b) {
      std::uint16_t r = static_cast<std::uint16_t>(b << 8);
      for (int i = 0; i < 8; ++i) {
        r = (r & 0x8000) ? static_cast<std::uint16_t>((r << 1) ^ 0x1021)
                         : static_cast<std::uint16_t>(r << 1);
      }
      t[static_cast<std::size_t>(b)] = r;
    }
    return t;
  }();
  std::uint16_t crc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    crc = static_cast<std::uint16_t>((crc << 8) ^ table[((crc >> 8) ^ data[i]) & 0xFFu]);
  }
  return crc;
}

bool check_crc_oracle() {
  const char* s = "123456789";
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s);
  if (table_crc(bytes, 9) != 0x31C3) return false;  // oracle self-check
  if (crc16_bytes(bytes, 9) != 0x31C3) return false;
  Bits bits;
  for (int i = 0; i < 9; ++i) {
    for (int j = 7; j >= 0; --j) bits.push_back((bytes[i] >> j) & 1);
  }
  std::uint16_t packed = 0;
  for (std::uint8_t b : crc16_bits(bits)) packed = static_cast<std::uint16_t>((packed << 1) | b);
  if (packed != 0x31C3) return false;
  auto rng = make_engine(99);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::uint8_t> data(1 + static_cast<int>(rng() % 32));
    for (auto& v : data) v = static_cast<std::uint8_t>(rng() & 0xFF);
    if (crc16_bytes(data.data(), data.size()) != table_crc(data.data(), data.size())) return false;
  }
  return true;
}

bool check_linearity() {
  auto rng = make_engine(100);
  for (int rep = 0; rep < 50; ++rep) {
    const Bits a = random_bits(256, rng);
    const Bits b = random_bits(256, rng);
    Bits sum(256);
    for (int i = 0; i < 256; ++i) sum[i] = a[i] ^ b[i];
    const Bits xa = polar_transform(a);
    const Bits xb = polar_transform(b);
    Bits xs(256);
    for (int i = 0; i < 256; ++i) xs[i] = xa[i] ^ xb[i];
    if (polar_transform(sum) != xs) return false;
    if (polar_transform(xa) != a) return false;  // involution
  }
  return true;
}

bool check_metric_ranges(const PolarCode& code) {
  const ChannelParams ch = make_channel(4.25, code.K, code.N);
  const int frozen = code.N - static_cast<int>(code.info_set.size());
  for (int rep = 0; rep < 50; ++rep) {
    auto rng = make_engine(derive_seed(7010, SeedTag::kBlerBlock, static_cast<std::uint64_t>(rep)));
    const Bits x = encode(code, assemble_message(code, random_bits(code.K, rng)));
    const Llrs llrs = transmit(x, ch, rng);
    BpState state = bp_init(code, llrs);
    for (int i = 0; i < 3; ++i) bp_iterate(state);
    const int ls = metric_ls(state);
    const int fs = metric_fs(state, code);
    const int re = metric_re(state, code);
    if (ls < 0 || ls > code.N || fs < 0 || fs > frozen || re < 0 || re > code.N) return false;
    const FastSscDetectResult fd1 = fastssc_detect(code, llrs, 1000, true);
    if (fd1.effort != 19 || !std::isfinite(fd1.metric)) return false;
  }
  return true;
}

bool check_scale_invariance(const PolarCode& code) {
  const ChannelParams ch = make_channel(4.25, code.K, code.N);
  for (int rep = 0; rep < 20; ++rep) {
    auto rng = make_engine(derive_seed(7011, SeedTag::kBlerBlock, static_cast<std::uint64_t>(rep)));
    std::vector<Llrs> cands;
    cands.push_back(transmit(encode(code, assemble_message(code, random_bits(code.K, rng))), ch, rng));
    for (int f = 0; f < 5; ++f) cands.push_back(transmit(random_bits(code.N, rng), ch, rng));

    const std::uint64_t tie = derive_seed(7012, SeedTag::kTieBreak, static_cast<std::uint64_t>(rep));
    const double scale = 2.3;
    for (int which = 0; which < 4; ++which) {
      std::vector<MetricValue> base, scaled;
      for (const Llrs& llrs : cands) {
        Llrs big(llrs);
        for (double& v : big) v *= scale;
        if (which == 3) {
          base.push_back({fastssc_detect(code, llrs, 19, true).metric, Method::kFastssc, 19});
          scaled.push_back({fastssc_detect(code, big, 19, true).metric, Method::kFastssc, 19});
          continue;
        }
        BpState s1 = bp_init(code, llrs);
        BpState s2 = bp_init(code, big);
        for (int i = 0; i < 3; ++i) {
          bp_iterate(s1);
          bp_iterate(s2);
        }
        const Method m = which == 0 ? Method::kLs : which == 1 ? Method::kFs : Method::kRe;
        const double v1 = m == Method::kLs   ? metric_ls(s1)
                          : m == Method::kFs ? metric_fs(s1, code)
                                             : metric_re(s1, code);
        const double v2 = m == Method::kLs   ? metric_ls(s2)
                          : m == Method::kFs ? metric_fs(s2, code)
                                             : metric_re(s2, code);
        base.push_back({v1, m, 3});
        scaled.push_back({v2, m, 3});
      }
      if (rank_all(base, tie) != rank_all(scaled, tie)) return false;
    }
  }
  return true;
}

std::string bler_csv_string(const PolarCode& code, int threads) {
  BlerConfig cfg;
  cfg.ebn0_db = {4.25};
  cfg.decoder = DecoderSpec::parse("sc");
  cfg.stop = StopRule{5000, 50, 16384};
  cfg.seed = 7;
  cfg.threads = threads;
  const auto points = run_bler(code, cfg);
  std::ostringstream os;
  write_bler_csv(os, {"rerun check"}, points);
  return os.str();
}

std::string mdr_csv_string(const PolarCode& code, int threads) {
  MdrConfig cfg;
  cfg.M = 8;
  cfg.requests = {{Method::kLs, {2}, true}, {Method::kFs, {1}, true}};
  cfg.ebn0_db = 4.25;
  cfg.trials = 300;
  cfg.seed = 9;
  cfg.threads = threads;
  const MdrResult r = run_mdr(code, cfg);
  std::ostringstream os;
  write_mdr_csv(os, {"rerun check"}, mdr_to_rows(r));
  return os.str();
}

void criterion10(Reporter& rep, const PolarCode& code) {
  const bool crc_ok = check_crc_oracle();
  const bool lin_ok = check_linearity();
  const bool range_ok = check_metric_ranges(code);
  const bool scale_ok = check_scale_invariance(code);

  const std::string bler1 = bler_csv_string(code, 1);
  const std::string bler4 = bler_csv_string(code, 4);
  const std::string mdr1 = mdr_csv_string(code, 1);
  const std::string mdr4 = mdr_csv_string(code, 4);
  const std::string mdr4_again = mdr_csv_string(code, 4);
  const bool rerun_ok = bler1 == bler4 && mdr1 == mdr4 && mdr4 == mdr4_again;

  std::ostringstream d;
  d << "crc oracle " << (crc_ok ? "ok" : "FAILED") << "; linearity/involution "
    << (lin_ok ? "ok" : "FAILED") << "; metric ranges " << (range_ok ? "ok" : "FAILED")
    << "; ranking scale-invariance " << (scale_ok ? "ok" : "FAILED")
    << "; parallel reruns byte-identical " << (rerun_ok ? "ok" : "FAILED");
  rep.line(10, crc_ok && lin_ok && range_ok && scale_ok && rerun_ok, d.str());
}

}  // namespace

int main() {
  const int threads = pick_threads();
  const PolarCode code = build_code(256, 24, 16);
  Reporter rep;
  std::cerr << "acceptance: using " << threads << " threads\n";

  criterion1(rep);
  criterion2(rep, code);

  // The block caps are sized so that near-target evaluations still collect
  // 250 errors while far-below-target edge evaluations stay cheap (they only
  // need to land decisively on the right side of the target).
  const Op scl2_2 = calibrate(code, "scl2", 1e-2, 3.5, 5.2, 200000, threads);
  const Op sc_2 = calibrate(code, "sc", 1e-2, 4.0, 6.0, 200000, threads);
  const Op bp15_2 = calibrate(code, "bp15", 1e-2, 4.0, 6.0, 200000, threads);
  const Op bp50_2 = calibrate(code, "bp50", 1e-2, 3.8, 5.8, 200000, threads);
  const Op sc_3 = calibrate(code, "sc", 1e-3, 4.6, 6.8, 1200000, threads);
  const Op scl2_3 = calibrate(code, "scl2", 1e-3, 4.0, 6.2, 1200000, threads);
  const Op scl4_3 = calibrate(code, "scl4", 1e-3, 3.6, 5.8, 1200000, threads);
  criterion3(rep, code, scl2_2, sc_2, bp15_2, bp50_2, sc_3, scl2_3, scl4_3, threads);

  const double op_db = scl2_2.ok ? scl2_2.db : 4.29;
  if (!scl2_2.ok) std::cerr << "using fallback operating point 4.29 dB for the MDR run\n";

  const FastSscTree tree = fastssc_build_tree(code);
  const int cnt_spc = tree.contributing_leaves(true);
  const int cnt_nospc = tree.contributing_leaves(false);

  MdrConfig mc;
  mc.M = 44;
  mc.ebn0_db = op_db;
  mc.trials = 10000;
  mc.seed = 1;
  mc.threads = threads;
  mc.oracle_list = 2;
  std::vector<int> spc_all(static_cast<std::size_t>(cnt_spc));
  std::vector<int> nospc_all(static_cast<std::size_t>(cnt_nospc));
  for (int t = 1; t <= cnt_spc; ++t) spc_all[static_cast<std::size_t>(t - 1)] = t;
  for (int t = 1; t <= cnt_nospc; ++t) nospc_all[static_cast<std::size_t>(t - 1)] = t;
  mc.requests = {{Method::kLs, {2, 3, 4, 5, 15}, true},
                 {Method::kFs, {3, 15}, true},
                 {Method::kRe, {7, 15, 50}, true},
                 {Method::kFastssc, spc_all, true},
                 {Method::kFastssc, nospc_all, false}};
  std::cerr << "acceptance: MDR at " << fd3(op_db) << " dB, " << mc.trials << " trials\n";
  const MdrResult mdr = run_mdr(code, mc);
  std::cerr << "acceptance: decodable trials " << mdr.decodable << "/" << mdr.trials << "\n";
  if (mdr.b_values.size() != 44 || mdr.b_values.front() != 1 || mdr.b_values.back() != 44) {
    std::cerr << "unexpected B grid from the MDR run\n";
    return 2;
  }

  criterion4(rep, mdr);
  criterion5(rep, mdr);
  criterion6(rep, mdr);
  criterion7(rep, mdr);
  criterion8(rep, mdr, cnt_nospc);
  criterion9(rep, mdr, tree, cnt_nospc);
  criterion10(rep, code);

  if (rep.failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
  } else {
    std::cout << "acceptance: " << rep.failures << " criterion(s) failed" << std::endl;
  }
  return rep.failures == 0 ? 0 : 1;
}
