#include "polarblind.h"

#include <fstream>
#include <memory>
#include <new>
#include <stdexcept>

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
#include "sim/mdr.hpp"

struct pb_code {
  pb::PolarCode code;
  pb::FastSscTree tree;
};

namespace {

template <typename Fn>
pb_status_t guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return PB_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return PB_ERR_NOMEM;
  } catch (const std::ios_base::failure&) {
    return PB_ERR_IO;
  } catch (...) {
    return PB_ERR_INTERNAL;
  }
}

pb::Bits to_bits(const uint8_t* data, int32_t n) {
  pb::Bits out(data, data + n);
  for (auto b : out) {
    if (b > 1) throw std::invalid_argument("bit buffers must contain 0/1 values");
  }
  return out;
}

pb::Llrs to_llrs(const double* data, int32_t n) { return pb::Llrs(data, data + n); }

void write_bits(const pb::Bits& bits, uint8_t* out) {
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i];
}

pb::StopRule to_stop(pb_stop_rule_t stop) {
  pb::StopRule out;
  out.min_blocks = stop.min_blocks;
  out.min_errors = stop.min_errors;
  out.max_blocks = stop.max_blocks;
  return out;
}

std::vector<std::string> to_comments(const char* const* comments, int32_t n) {
  std::vector<std::string> out;
  out.reserve(n > 0 ? n : 0);
  for (int32_t i = 0; i < n; ++i) {
    if (!comments || !comments[i]) throw std::invalid_argument("null comment line");
    out.emplace_back(comments[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pb_status_string(pb_status_t status) {
  switch (status) {
    case PB_OK: return "ok";
    case PB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PB_ERR_NOMEM: return "out of memory";
    case PB_ERR_IO: return "i/o error";
    case PB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

pb_status_t pb_code_create(int32_t N, int32_t K, int32_t C, double design_param,
                           pb_code_t** out) {
  if (!out) return PB_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<pb_code>();
    handle->code = pb::build_code(N, K, C, design_param);
    handle->tree = pb::fastssc_build_tree(handle->code);
    *out = handle.release();
    return PB_OK;
  });
}

void pb_code_destroy(pb_code_t* code) { delete code; }

int32_t pb_code_block_length(const pb_code_t* code) { return code ? code->code.N : 0; }
int32_t pb_code_message_bits(const pb_code_t* code) { return code ? code->code.K : 0; }
int32_t pb_code_crc_bits(const pb_code_t* code) { return code ? code->code.C : 0; }

pb_status_t pb_code_info_set(const pb_code_t* code, int32_t* out, int32_t cap,
                             int32_t* written) {
  if (!code || !out || !written) return PB_ERR_INVALID_ARGUMENT;
  const auto& info = code->code.info_set;
  if (cap < static_cast<int32_t>(info.size())) return PB_ERR_INVALID_ARGUMENT;
  for (std::size_t i = 0; i < info.size(); ++i) out[i] = info[i];
  *written = static_cast<int32_t>(info.size());
  return PB_OK;
}

pb_status_t pb_code_fastssc_leaves(const pb_code_t* code, int32_t* starts, int32_t* sizes,
                                   int32_t* kinds, int32_t cap, int32_t* count) {
  if (!code || !starts || !sizes || !kinds || !count) return PB_ERR_INVALID_ARGUMENT;
  const auto& tree = code->tree;
  const int32_t n = static_cast<int32_t>(tree.leaves.size());
  if (cap < n) return PB_ERR_INVALID_ARGUMENT;
  for (int32_t i = 0; i < n; ++i) {
    const auto& nd = tree.nodes[tree.leaves[i]];
    starts[i] = nd.start;
    sizes[i] = nd.size;
    kinds[i] = static_cast<int32_t>(nd.kind);
  }
  *count = n;
  return PB_OK;
}

const char* pb_leaf_kind_name(int32_t kind) {
  return pb::node_kind_name(static_cast<pb::NodeKind>(kind));
}

pb_status_t pb_crc16(const uint8_t* bits, int32_t nbits, uint8_t* out16) {
  if (!bits || nbits < 0 || !out16) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    write_bits(pb::crc16_bits(to_bits(bits, nbits)), out16);
    return PB_OK;
  });
}

pb_status_t pb_assemble_message(const pb_code_t* code, const uint8_t* msg, uint8_t* u_out) {
  if (!code || !msg || !u_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    write_bits(pb::assemble_message(code->code, to_bits(msg, code->code.K)), u_out);
    return PB_OK;
  });
}

pb_status_t pb_encode(const pb_code_t* code, const uint8_t* u, uint8_t* x_out) {
  if (!code || !u || !x_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    write_bits(pb::encode(code->code, to_bits(u, code->code.N)), x_out);
    return PB_OK;
  });
}

pb_status_t pb_transmit(const pb_code_t* code, const uint8_t* x, double ebn0_db,
                        uint64_t seed, double* llr_out) {
  if (!code || !x || !llr_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto ch = pb::make_channel(ebn0_db, code->code.K, code->code.N);
    auto rng = pb::make_engine(seed);
    const auto llrs = pb::transmit(to_bits(x, code->code.N), ch, rng);
    for (std::size_t i = 0; i < llrs.size(); ++i) llr_out[i] = llrs[i];
    return PB_OK;
  });
}

pb_status_t pb_sc_decode(const pb_code_t* code, const double* llrs, uint8_t* u_out) {
  if (!code || !llrs || !u_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    write_bits(pb::sc_decode(code->code, to_llrs(llrs, code->code.N)), u_out);
    return PB_OK;
  });
}

pb_status_t pb_fastssc_decode(const pb_code_t* code, const double* llrs, uint8_t* u_out) {
  if (!code || !llrs || !u_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    write_bits(pb::fastssc_decode(code->code, to_llrs(llrs, code->code.N)), u_out);
    return PB_OK;
  });
}

pb_status_t pb_bp_decode(const pb_code_t* code, const double* llrs, int32_t iterations,
                         uint8_t* u_out) {
  if (!code || !llrs || !u_out || iterations < 1) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto state = pb::bp_init(code->code, to_llrs(llrs, code->code.N));
    for (int32_t i = 0; i < iterations; ++i) pb::bp_iterate(state);
    write_bits(pb::bp_decode(state, code->code), u_out);
    return PB_OK;
  });
}

pb_status_t pb_scl_decode(const pb_code_t* code, const double* llrs, int32_t list_size,
                          int32_t use_crc, uint8_t* u_out, int32_t* found) {
  if (!code || !llrs || !u_out || !found) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto res =
        pb::scl_decode(code->code, to_llrs(llrs, code->code.N), list_size, use_crc != 0);
    *found = res.has_value() ? 1 : 0;
    if (res) write_bits(*res, u_out);
    return PB_OK;
  });
}

pb_status_t pb_detect_metric(const pb_code_t* code, const double* llrs, const char* method,
                             int32_t effort, int32_t include_spc, double* value,
                             int32_t* effort_used) {
  if (!code || !llrs || !method || !value || !effort_used) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const pb::Method m = pb::parse_method(method);
    const auto in = to_llrs(llrs, code->code.N);
    if (m == pb::Method::kFastssc) {
      const auto res = pb::fastssc_detect(code->code, in, effort, include_spc != 0);
      *value = res.metric;
      *effort_used = res.effort;
      return PB_OK;
    }
    if (effort < 1) throw std::invalid_argument("detect: effort must be positive");
    auto state = pb::bp_init(code->code, in);
    for (int32_t i = 0; i < effort; ++i) pb::bp_iterate(state);
    switch (m) {
      case pb::Method::kLs: *value = pb::metric_ls(state); break;
      case pb::Method::kFs: *value = pb::metric_fs(state, code->code); break;
      case pb::Method::kRe: *value = pb::metric_re(state, code->code); break;
      case pb::Method::kFastssc: break;
    }
    *effort_used = effort;
    return PB_OK;
  });
}

pb_status_t pb_rank_candidates(const double* values, int32_t m, int32_t b, uint64_t tie_seed,
                               int32_t* order_out, int32_t* written) {
  if (!values || m < 1 || b < 0 || !order_out || !written) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<pb::MetricValue> metrics(m);
    for (int32_t i = 0; i < m; ++i) metrics[i] = {values[i], pb::Method::kLs, 0};
    const auto order = pb::rank_candidates(metrics, b, tie_seed);
    for (std::size_t i = 0; i < order.size(); ++i) order_out[i] = order[i];
    *written = static_cast<int32_t>(order.size());
    return PB_OK;
  });
}

pb_status_t pb_second_stage(const pb_code_t* code, const double* llrs, int32_t count,
                            int32_t list_size, int32_t* chosen) {
  if (!code || !llrs || count < 0 || !chosen) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<pb::Llrs> candidates(count);
    for (int32_t i = 0; i < count; ++i) {
      candidates[i] = to_llrs(llrs + static_cast<std::size_t>(i) * code->code.N,
                              code->code.N);
    }
    const auto res = pb::second_stage(code->code, candidates, list_size);
    *chosen = res.value_or(-1);
    return PB_OK;
  });
}

pb_status_t pb_run_bler(const pb_code_t* code, const char* decoder, const double* ebn0_db,
                        int32_t n_points, pb_stop_rule_t stop, int32_t noiseless,
                        uint64_t seed, int32_t threads, pb_bler_point_t* points_out) {
  if (!code || !decoder || !ebn0_db || n_points < 1 || !points_out) {
    return PB_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    pb::BlerConfig cfg;
    cfg.decoder = pb::DecoderSpec::parse(decoder);
    cfg.ebn0_db.assign(ebn0_db, ebn0_db + n_points);
    cfg.stop = to_stop(stop);
    cfg.noiseless = noiseless != 0;
    cfg.seed = seed;
    cfg.threads = threads;
    const auto points = pb::run_bler(code->code, cfg);
    for (std::size_t i = 0; i < points.size(); ++i) {
      points_out[i] = {points[i].ebn0_db, points[i].fer, points[i].errors, points[i].blocks};
    }
    return PB_OK;
  });
}

pb_status_t pb_calibrate(const pb_code_t* code, const char* decoder, double target,
                         double lo, double hi, pb_stop_rule_t stop, uint64_t seed,
                         int32_t threads, double* ebn0_out, pb_bler_point_t* last_point) {
  if (!code || !decoder || !ebn0_out) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto res = pb::calibrate_operating_point(code->code, pb::DecoderSpec::parse(decoder),
                                                   target, lo, hi, to_stop(stop), seed,
                                                   threads);
    *ebn0_out = res.ebn0_db;
    if (last_point) {
      *last_point = {res.last_point.ebn0_db, res.last_point.fer, res.last_point.errors,
                     res.last_point.blocks};
    }
    return PB_OK;
  });
}

pb_status_t pb_run_mdr(const pb_code_t* code, const pb_mdr_params_t* params,
                       pb_mdr_cell_t* cells_out, int64_t* decodable_out) {
  if (!code || !params || !params->method || !params->efforts || params->n_efforts < 1 ||
      !cells_out) {
    return PB_ERR_INVALID_ARGUMENT;
  }
  if (!params->b_values && params->n_b != 0) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    pb::MdrConfig cfg;
    cfg.M = params->M;
    pb::MethodRequest req;
    req.method = pb::parse_method(params->method);
    req.efforts.assign(params->efforts, params->efforts + params->n_efforts);
    req.include_spc = params->include_spc != 0;
    cfg.requests = {req};
    if (params->b_values) {
      cfg.b_values.assign(params->b_values, params->b_values + params->n_b);
    }
    cfg.ebn0_db = params->ebn0_db;
    cfg.noiseless = params->noiseless != 0;
    cfg.trials = params->trials;
    cfg.seed = params->seed;
    cfg.threads = params->threads;
    cfg.oracle_list = params->oracle_list;
    const auto result = pb::run_mdr(code->code, cfg);

    const std::size_t n_b = result.b_values.size();
    for (std::size_t s = 0; s < result.series.size(); ++s) {
      for (std::size_t bi = 0; bi < n_b; ++bi) {
        cells_out[s * n_b + bi] = {result.series[s].mdr[bi], result.series[s].misses[bi]};
      }
    }
    if (decodable_out) *decodable_out = result.decodable;
    return PB_OK;
  });
}

pb_status_t pb_write_bler_csv(const char* path, const char* const* comments,
                              int32_t n_comments, const pb_bler_point_t* points, int32_t n) {
  if (!path || n < 0 || (n > 0 && !points) || n_comments < 0) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<pb::BlerPoint> pts(n);
    for (int32_t i = 0; i < n; ++i) {
      pts[i] = {points[i].ebn0_db, points[i].fer, points[i].errors, points[i].blocks};
    }
    const auto comment_lines = to_comments(comments, n_comments);
    std::ofstream os(path, std::ios::binary);
    if (!os) return PB_ERR_IO;
    pb::write_bler_csv(os, comment_lines, pts);
    os.flush();
    return os ? PB_OK : PB_ERR_IO;
  });
}

pb_status_t pb_write_mdr_csv(const char* path, const char* const* comments,
                             int32_t n_comments, const pb_mdr_row_t* rows, int32_t n) {
  if (!path || n < 0 || (n > 0 && !rows) || n_comments < 0) return PB_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<pb::MdrRow> out(n);
    for (int32_t i = 0; i < n; ++i) {
      if (!rows[i].method) throw std::invalid_argument("null method in csv row");
      out[i].method = rows[i].method;
      out[i].effort = rows[i].effort;
      out[i].b = rows[i].b;
      out[i].mdr = rows[i].mdr;
      out[i].misses = rows[i].misses;
      out[i].trials = rows[i].trials;
    }
    const auto comment_lines = to_comments(comments, n_comments);
    std::ofstream os(path, std::ios::binary);
    if (!os) return PB_ERR_IO;
    pb::write_mdr_csv(os, comment_lines, out);
    os.flush();
    return os ? PB_OK : PB_ERR_IO;
  });
}

}  // extern "C"
