// Command-line front end for the polarblind shared library.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarblind.h"

namespace {

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void check(pb_status_t st, const std::string& what) {
  if (st != PB_OK) throw std::runtime_error(what + ": " + pb_status_string(st));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_d(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

int parse_i(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

// "x", "x,y,z" or inclusive "start:stop:step".
std::vector<double> parse_drange(const std::string& spec) {
  if (spec.find(',') != std::string::npos) {
    std::vector<double> out;
    for (const auto& part : split(spec, ',')) out.push_back(parse_d(part));
    return out;
  }
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("range '" + spec + "' must be start:stop:step");
    }
    const double start = parse_d(parts[0]);
    const double stop = parse_d(parts[1]);
    const double step = parse_d(parts[2]);
    if (step <= 0 || stop < start) {
      throw std::invalid_argument("range '" + spec + "' must ascend with positive step");
    }
    const long count = static_cast<long>((stop - start) / step + 1e-9) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (long i = 0; i < count; ++i) out.push_back(start + i * step);
    return out;
  }
  return {parse_d(spec)};
}

// "x", "x,y,z", "start:stop" or "start:stop:step".
std::vector<int> parse_irange(const std::string& spec) {
  if (spec.find(',') != std::string::npos) {
    std::vector<int> out;
    for (const auto& part : split(spec, ',')) out.push_back(parse_i(part));
    return out;
  }
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2 && parts.size() != 3) {
      throw std::invalid_argument("range '" + spec + "' must be start:stop[:step]");
    }
    const int start = parse_i(parts[0]);
    const int stop = parse_i(parts[1]);
    const int step = parts.size() == 3 ? parse_i(parts[2]) : 1;
    if (step <= 0 || stop < start) {
      throw std::invalid_argument("range '" + spec + "' must ascend with positive step");
    }
    std::vector<int> out;
    for (int v = start; v <= stop; v += step) out.push_back(v);
    return out;
  }
  return {parse_i(spec)};
}

struct CodeDeleter {
  void operator()(pb_code_t* c) const { pb_code_destroy(c); }
};
using CodeHandle = std::unique_ptr<pb_code_t, CodeDeleter>;

struct Options {
  int32_t N = 256;
  int32_t K = 24;
  int32_t C = 16;
  double design = 0.5;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_dir = ".";
};

CodeHandle make_code(const Options& opt) {
  pb_code_t* raw = nullptr;
  check(pb_code_create(opt.N, opt.K, opt.C, opt.design, &raw), "building the code");
  return CodeHandle(raw);
}

std::vector<std::string> base_comments(const Options& opt, const std::string& command) {
  return {
      "polarblind " + command,
      "N=" + std::to_string(opt.N) + " K=" + std::to_string(opt.K) + " C=" +
          std::to_string(opt.C) + " design=" + fmt(opt.design),
      "seed=" + std::to_string(opt.seed) + " threads=" + std::to_string(opt.threads),
  };
}

std::vector<const char*> comment_ptrs(const std::vector<std::string>& comments) {
  std::vector<const char*> out;
  out.reserve(comments.size());
  for (const auto& c : comments) out.push_back(c.c_str());
  return out;
}

// Leaf kinds as exposed by the library.
constexpr int32_t kKindRate0 = 0;
constexpr int32_t kKindSpc = 3;

struct LeafInfo {
  std::vector<int32_t> starts, sizes, kinds;
  int contributing = 0;
  int contributing_no_spc = 0;
};

LeafInfo fetch_leaves(const pb_code_t* code, int32_t N) {
  LeafInfo info;
  info.starts.resize(N);
  info.sizes.resize(N);
  info.kinds.resize(N);
  int32_t count = 0;
  check(pb_code_fastssc_leaves(code, info.starts.data(), info.sizes.data(),
                               info.kinds.data(), N, &count),
        "listing decoder tree leaves");
  info.starts.resize(count);
  info.sizes.resize(count);
  info.kinds.resize(count);
  for (int32_t k : info.kinds) {
    const bool contributes = k == kKindRate0 || k == 2 /* REP */ || k == kKindSpc;
    if (contributes) {
      ++info.contributing;
      if (k != kKindSpc) ++info.contributing_no_spc;
    }
  }
  return info;
}

void cmd_code_info(const Options& opt) {
  const CodeHandle code = make_code(opt);
  const int32_t nk = opt.K + opt.C;
  std::vector<int32_t> info_set(nk);
  int32_t written = 0;
  check(pb_code_info_set(code.get(), info_set.data(), nk, &written), "reading the info set");

  std::cout << "N " << opt.N << "\n"
            << "K " << opt.K << "\n"
            << "C " << opt.C << "\n"
            << "design " << fmt(opt.design) << "\n";
  std::cout << "information_set " << written << "\n";
  for (int32_t i = 0; i < written; ++i) std::cout << info_set[i] << "\n";

  std::vector<bool> is_info(opt.N, false);
  for (int32_t i = 0; i < written; ++i) is_info[info_set[i]] = true;
  std::cout << "frozen_set " << (opt.N - written) << "\n";
  for (int32_t i = 0; i < opt.N; ++i) {
    if (!is_info[i]) std::cout << i << "\n";
  }

  const LeafInfo leaves = fetch_leaves(code.get(), opt.N);
  std::cout << "fastssc_leaves " << leaves.starts.size() << "\n";
  for (std::size_t i = 0; i < leaves.starts.size(); ++i) {
    std::cout << leaves.starts[i] << " " << leaves.sizes[i] << " "
              << pb_leaf_kind_name(leaves.kinds[i]) << "\n";
  }
  std::cout << "contributing_leaves " << leaves.contributing << "\n"
            << "contributing_leaves_no_spc " << leaves.contributing_no_spc << "\n";
}

struct BlerArgs {
  std::vector<std::string> decoders{"sc", "bp15", "bp50", "scl2", "scl4"};
  std::string ebn0 = "3.0:6.0:0.25";
  std::int64_t min_blocks = 50000;
  std::int64_t min_errors = 500;
  std::int64_t max_blocks = 2000000;
  bool noiseless = false;
};

void cmd_bler(const Options& opt, const BlerArgs& args) {
  const std::vector<double> points = parse_drange(args.ebn0);
  const CodeHandle code = make_code(opt);
  const pb_stop_rule_t stop{args.min_blocks, args.min_errors, args.max_blocks};

  for (const auto& token : args.decoders) {
    std::vector<pb_bler_point_t> out(points.size());
    check(pb_run_bler(code.get(), token.c_str(), points.data(),
                      static_cast<int32_t>(points.size()), stop, args.noiseless ? 1 : 0,
                      opt.seed, opt.threads, out.data()),
          "running the block-error sweep for " + token);

    auto comments = base_comments(opt, "bler");
    comments.push_back("decoder=" + token + " noiseless=" + (args.noiseless ? "1" : "0"));
    comments.push_back("stop: min_blocks=" + std::to_string(args.min_blocks) +
                       " min_errors=" + std::to_string(args.min_errors) +
                       " max_blocks=" + std::to_string(args.max_blocks));
    const auto ptrs = comment_ptrs(comments);
    const std::string path = opt.out_dir + "/bler_" + token + ".csv";
    check(pb_write_bler_csv(path.c_str(), ptrs.data(), static_cast<int32_t>(ptrs.size()),
                            out.data(), static_cast<int32_t>(out.size())),
          "writing " + path);

    for (const auto& p : out) {
      std::cout << token << " ebn0=" << fmt(p.ebn0_db) << " fer=" << fmt(p.fer)
                << " errors=" << p.errors << " blocks=" << p.blocks << "\n";
    }
    std::cout << "wrote " << path << "\n";
  }
}

struct MdrArgs {
  std::string method;
  std::string iters;  // BP-based efforts
  std::string t;      // Fast-SSC efforts
  bool include_spc = true;
  int32_t M = 44;
  std::string b;  // empty: 1..M
  std::int64_t trials = 10000;
  // Default operating point: the CRC-aided list-2 decoder crosses a block
  // error rate of 1e-2 here (reproduce with `polarblind calibrate`).
  double ebn0 = 4.29;
  bool noiseless = false;
  int32_t oracle_list = 2;
};

void cmd_mdr(const Options& opt, const MdrArgs& args) {
  const CodeHandle code = make_code(opt);
  const bool fastssc = args.method == "fastssc";
  const bool include_spc = args.include_spc;

  std::vector<int> efforts;
  if (fastssc) {
    if (!args.iters.empty()) {
      throw std::invalid_argument("--iters applies to ls/fs/re; use --t with fastssc");
    }
    const LeafInfo leaves = fetch_leaves(code.get(), opt.N);
    const int avail = include_spc ? leaves.contributing : leaves.contributing_no_spc;
    efforts = args.t.empty() ? parse_irange("1:" + std::to_string(avail))
                             : parse_irange(args.t);
    for (int e : efforts) {
      if (e < 1 || e > avail) {
        throw std::invalid_argument("--t values must lie in [1, " + std::to_string(avail) +
                                    "] for this code" +
                                    (include_spc ? "" : " without SPC leaves"));
      }
    }
  } else {
    if (args.method != "ls" && args.method != "fs" && args.method != "re") {
      throw std::invalid_argument("unknown method '" + args.method +
                                  "' (expected ls, fs, re or fastssc)");
    }
    if (!args.t.empty()) {
      throw std::invalid_argument("--t applies to fastssc; use --iters with ls/fs/re");
    }
    const std::string fallback = args.method == "ls" ? "2:15" : "1:15";
    efforts = parse_irange(args.iters.empty() ? fallback : args.iters);
    const int min_effort = args.method == "ls" ? 2 : 1;
    for (int e : efforts) {
      if (e < min_effort) {
        throw std::invalid_argument(args.method == "ls"
                                        ? "--iters values must be >= 2 for ls (the metric "
                                          "compares two consecutive iterations)"
                                        : "--iters values must be >= 1");
      }
    }
  }

  std::vector<int> b_values =
      args.b.empty() ? parse_irange("1:" + std::to_string(args.M)) : parse_irange(args.b);
  for (int b : b_values) {
    if (b < 1 || b > args.M) {
      throw std::invalid_argument("--B values must lie in [1, M]");
    }
  }

  std::vector<int32_t> efforts32(efforts.begin(), efforts.end());
  std::vector<int32_t> b32(b_values.begin(), b_values.end());

  pb_mdr_params_t params{};
  params.M = args.M;
  params.method = args.method.c_str();
  params.efforts = efforts32.data();
  params.n_efforts = static_cast<int32_t>(efforts32.size());
  params.include_spc = include_spc ? 1 : 0;
  params.b_values = b32.data();
  params.n_b = static_cast<int32_t>(b32.size());
  params.ebn0_db = args.ebn0;
  params.noiseless = args.noiseless ? 1 : 0;
  params.trials = args.trials;
  params.seed = opt.seed;
  params.threads = opt.threads;
  params.oracle_list = args.oracle_list;

  std::vector<pb_mdr_cell_t> cells(efforts32.size() * b32.size());
  std::int64_t decodable = 0;
  check(pb_run_mdr(code.get(), &params, cells.data(), &decodable),
        "running the missed-detection sweep");

  const std::string method_label =
      fastssc && !include_spc ? args.method + "-nospc" : args.method;
  std::vector<pb_mdr_row_t> rows;
  rows.reserve(cells.size());
  for (std::size_t e = 0; e < efforts32.size(); ++e) {
    for (std::size_t bi = 0; bi < b32.size(); ++bi) {
      const auto& cell = cells[e * b32.size() + bi];
      rows.push_back({method_label.c_str(), efforts32[e], b32[bi], cell.mdr, cell.misses,
                      args.trials});
    }
  }

  auto comments = base_comments(opt, "mdr");
  comments.push_back("method=" + args.method + " include_spc=" + (include_spc ? "1" : "0"));
  comments.push_back("M=" + std::to_string(args.M) + " trials=" + std::to_string(args.trials) +
                     " ebn0_db=" + fmt(args.ebn0) + " noiseless=" +
                     (args.noiseless ? "1" : "0") + " oracle_list=" +
                     std::to_string(args.oracle_list));
  comments.push_back("decodable_trials=" + std::to_string(decodable));
  const auto ptrs = comment_ptrs(comments);

  std::string path = opt.out_dir + "/mdr_" + args.method;
  if (fastssc && !include_spc) path += "_nospc";
  path += ".csv";
  check(pb_write_mdr_csv(path.c_str(), ptrs.data(), static_cast<int32_t>(ptrs.size()),
                         rows.data(), static_cast<int32_t>(rows.size())),
        "writing " + path);

  std::cout << "decodable trials: " << decodable << "/" << args.trials << "\n"
            << "wrote " << path << " (" << efforts32.size() << " efforts x " << b32.size()
            << " B values)\n";
}

struct CalibrateArgs {
  std::string decoder = "scl2";
  double target = 0.01;
  double lo = 3.0;
  double hi = 6.0;
  std::int64_t min_blocks = 50000;
  std::int64_t min_errors = 500;
  std::int64_t max_blocks = 2000000;
};

void cmd_calibrate(const Options& opt, const CalibrateArgs& args) {
  const CodeHandle code = make_code(opt);
  const pb_stop_rule_t stop{args.min_blocks, args.min_errors, args.max_blocks};
  double ebn0 = 0.0;
  pb_bler_point_t last{};
  check(pb_calibrate(code.get(), args.decoder.c_str(), args.target, args.lo, args.hi, stop,
                     opt.seed, opt.threads, &ebn0, &last),
        "calibrating the operating point");
  std::cout << "ebn0_db=" << fmt(ebn0) << "\n"
            << "decoder=" << args.decoder << " target=" << fmt(args.target)
            << " last_eval: ebn0=" << fmt(last.ebn0_db) << " fer=" << fmt(last.fer)
            << " errors=" << last.errors << " blocks=" << last.blocks << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulations for two-stage blind detection of polar-coded messages"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file");

  Options opt;
  app.add_option("--N", opt.N, "Block length (power of two)")->capture_default_str();
  app.add_option("--K", opt.K, "Message bits")->capture_default_str();
  app.add_option("--C", opt.C, "CRC bits (16 or 0)")->capture_default_str();
  app.add_option("--design", opt.design, "Construction design parameter in (0,1)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Root seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads (results are thread-count invariant)")
      ->capture_default_str();
  app.add_option("--out-dir", opt.out_dir, "Directory for CSV output")->capture_default_str();

  auto* info_cmd = app.add_subcommand("code-info", "Print the code construction and decoder tree");
  info_cmd->callback([&] { cmd_code_info(opt); });

  BlerArgs bler;
  auto* bler_cmd = app.add_subcommand("bler", "Block-error-rate sweep");
  bler_cmd->add_option("--decoder", bler.decoders,
                       "Decoders: sc, bp<iters>, scl<list> (repeatable)")
      ->capture_default_str();
  bler_cmd->add_option("--ebn0", bler.ebn0, "Eb/N0 sweep: value, list or start:stop:step")
      ->capture_default_str();
  bler_cmd->add_option("--min-blocks", bler.min_blocks, "Minimum blocks per point")
      ->capture_default_str();
  bler_cmd->add_option("--min-errors", bler.min_errors, "Minimum errors per point")
      ->capture_default_str();
  bler_cmd->add_option("--max-blocks", bler.max_blocks, "Hard block cap per point")
      ->capture_default_str();
  bler_cmd->add_flag("--noiseless", bler.noiseless, "Smoke mode: no channel noise");
  bler_cmd->callback([&] { cmd_bler(opt, bler); });

  MdrArgs mdr;
  auto* mdr_cmd = app.add_subcommand("mdr", "Missed-detection-rate sweep over B");
  mdr_cmd->add_option("--method", mdr.method, "Detection metric: ls, fs, re or fastssc")
      ->required();
  mdr_cmd->add_option("--iters", mdr.iters,
                      "BP iteration counts for ls/fs/re (default ls 2:15, fs/re 1:15)");
  mdr_cmd->add_option("--t", mdr.t,
                      "Contributing-leaf counts for fastssc (default: all available)");
  mdr_cmd->add_flag("--include-spc,!--no-spc", mdr.include_spc,
                    "Include SPC leaves in the fastssc metric (default on)");
  mdr_cmd->add_option("--M", mdr.M, "Candidate blocks per trial")->capture_default_str();
  mdr_cmd->add_option("--B", mdr.b, "Retained-candidate counts (default 1:M)");
  mdr_cmd->add_option("--trials", mdr.trials, "Trials")->capture_default_str();
  mdr_cmd->add_option("--ebn0", mdr.ebn0, "Eb/N0 in dB")->capture_default_str();
  mdr_cmd->add_flag("--noiseless", mdr.noiseless, "Smoke mode: no channel noise");
  mdr_cmd->add_option("--oracle-list", mdr.oracle_list, "Decodability oracle list size")
      ->capture_default_str();
  mdr_cmd->callback([&] { cmd_mdr(opt, mdr); });

  CalibrateArgs cal;
  auto* cal_cmd = app.add_subcommand("calibrate", "Find the Eb/N0 hitting a target BLER");
  cal_cmd->add_option("--decoder", cal.decoder, "Decoder token")->capture_default_str();
  cal_cmd->add_option("--target", cal.target, "Target BLER")->capture_default_str();
  cal_cmd->add_option("--lo", cal.lo, "Bracket low edge (dB)")->capture_default_str();
  cal_cmd->add_option("--hi", cal.hi, "Bracket high edge (dB)")->capture_default_str();
  cal_cmd->add_option("--min-blocks", cal.min_blocks, "Minimum blocks per evaluation")
      ->capture_default_str();
  cal_cmd->add_option("--min-errors", cal.min_errors, "Minimum errors per evaluation")
      ->capture_default_str();
  cal_cmd->add_option("--max-blocks", cal.max_blocks, "Hard block cap per evaluation")
      ->capture_default_str();
  cal_cmd->callback([&] { cmd_calibrate(opt, cal); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
