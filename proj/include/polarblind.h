/* polarblind: blind detection of polar-coded control messages.
 *
 * C interface to the simulation library.  All functions return a
 * pb_status_t; outputs are written through caller-provided buffers.  A
 * pb_code_t handle is immutable after creation and may be shared across
 * threads; decode and simulation calls allocate their own scratch.
 *
 * Bit buffers hold one bit per byte (values 0 or 1).  LLR buffers are
 * doubles where a nonnegative value favors bit 0.
 */
#ifndef POLARBLIND_H
#define POLARBLIND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
  PB_OK = 0,
  PB_ERR_INVALID_ARGUMENT = 1,
  PB_ERR_NOMEM = 2,
  PB_ERR_IO = 3,
  PB_ERR_INTERNAL = 4
} pb_status_t;

/* Human-readable name for a status code; never NULL. */
const char* pb_status_string(pb_status_t status);

typedef struct pb_code pb_code_t;

/* Builds a code.  N must be a power of two; K + C <= N.  C is 16 when the
 * CRC field is in use, 0 for plain codes.  design_param in (0, 1); 0.5 is
 * the default construction. */
pb_status_t pb_code_create(int32_t N, int32_t K, int32_t C, double design_param,
                           pb_code_t** out);
void pb_code_destroy(pb_code_t* code);

int32_t pb_code_block_length(const pb_code_t* code);   /* N */
int32_t pb_code_message_bits(const pb_code_t* code);   /* K */
int32_t pb_code_crc_bits(const pb_code_t* code);       /* C */

/* Information set, ascending.  cap is the capacity of `out`; *written
 * receives K + C.  Fails when cap is too small. */
pb_status_t pb_code_info_set(const pb_code_t* code, int32_t* out, int32_t cap,
                             int32_t* written);

/* Fast-SSC leaf decomposition in traversal order.  kinds: 0 RATE0, 1 RATE1,
 * 2 REP, 3 SPC.  *count receives the number of leaves. */
pb_status_t pb_code_fastssc_leaves(const pb_code_t* code, int32_t* starts, int32_t* sizes,
                                   int32_t* kinds, int32_t cap, int32_t* count);
const char* pb_leaf_kind_name(int32_t kind);

/* CRC-16 (polynomial z^16 + z^12 + z^5 + 1, zero init, MSB first) of nbits
 * payload bits; writes the 16 parity bits. */
pb_status_t pb_crc16(const uint8_t* bits, int32_t nbits, uint8_t* out16);

/* msg: K bits.  u_out: N bits (message + CRC on the information set). */
pb_status_t pb_assemble_message(const pb_code_t* code, const uint8_t* msg, uint8_t* u_out);

/* u: N bits with zero frozen positions.  x_out: N bits. */
pb_status_t pb_encode(const pb_code_t* code, const uint8_t* u, uint8_t* x_out);

/* BPSK + AWGN at ebn0_db (rate K/N); llr_out: N channel LLRs. */
pb_status_t pb_transmit(const pb_code_t* code, const uint8_t* x, double ebn0_db,
                        uint64_t seed, double* llr_out);

/* Decoders; u_out: N bits.  pb_scl_decode sets *found to 0 and leaves u_out
 * untouched when use_crc is nonzero and no path passes the CRC. */
pb_status_t pb_sc_decode(const pb_code_t* code, const double* llrs, uint8_t* u_out);
pb_status_t pb_fastssc_decode(const pb_code_t* code, const double* llrs, uint8_t* u_out);
pb_status_t pb_bp_decode(const pb_code_t* code, const double* llrs, int32_t iterations,
                         uint8_t* u_out);
pb_status_t pb_scl_decode(const pb_code_t* code, const double* llrs, int32_t list_size,
                          int32_t use_crc, uint8_t* u_out, int32_t* found);

/* First-stage detection metric of one candidate block.
 * method: "ls", "fs", "re" (effort = BP iterations, ls needs >= 2) or
 * "fastssc" (effort = contributing leaves to visit; clamped to the number
 * available).  *effort_used reports the effort actually spent. */
pb_status_t pb_detect_metric(const pb_code_t* code, const double* llrs, const char* method,
                             int32_t effort, int32_t include_spc, double* value,
                             int32_t* effort_used);

/* Orders m candidates by metric value, best first, writing min(b, m)
 * indices.  Ties are broken uniformly by tie_seed. */
pb_status_t pb_rank_candidates(const double* values, int32_t m, int32_t b, uint64_t tie_seed,
                               int32_t* order_out, int32_t* written);

/* CRC-aided SCL over `count` candidates of N LLRs each (row-major).
 * *chosen receives the winning candidate index, or -1 when none passes. */
pb_status_t pb_second_stage(const pb_code_t* code, const double* llrs, int32_t count,
                            int32_t list_size, int32_t* chosen);

typedef struct pb_stop_rule {
  int64_t min_blocks;
  int64_t min_errors;
  int64_t max_blocks;
} pb_stop_rule_t;

typedef struct pb_bler_point {
  double ebn0_db;
  double fer;
  int64_t errors;
  int64_t blocks;
} pb_bler_point_t;

/* Block-error-rate sweep.  decoder: "sc", "bp<iters>" or "scl<list>"
 * (CRC-aided).  points_out must hold n_points entries. */
pb_status_t pb_run_bler(const pb_code_t* code, const char* decoder, const double* ebn0_db,
                        int32_t n_points, pb_stop_rule_t stop, int32_t noiseless,
                        uint64_t seed, int32_t threads, pb_bler_point_t* points_out);

/* Bisects Eb/N0 for the given target BLER inside [lo, hi]. */
pb_status_t pb_calibrate(const pb_code_t* code, const char* decoder, double target,
                         double lo, double hi, pb_stop_rule_t stop, uint64_t seed,
                         int32_t threads, double* ebn0_out, pb_bler_point_t* last_point);

typedef struct pb_mdr_params {
  int32_t M;                 /* candidate blocks per trial */
  const char* method;        /* "ls", "fs", "re", "fastssc" */
  const int32_t* efforts;
  int32_t n_efforts;
  int32_t include_spc;       /* fastssc only */
  const int32_t* b_values;   /* NULL for 1..M */
  int32_t n_b;
  double ebn0_db;
  int32_t noiseless;
  int64_t trials;
  uint64_t seed;
  int32_t threads;
  int32_t oracle_list;       /* decodability oracle list size */
} pb_mdr_params_t;

typedef struct pb_mdr_cell {
  double mdr;
  int64_t misses;
} pb_mdr_cell_t;

/* Missed-detection rate over the B sweep.  cells_out must hold
 * n_efforts * n_b entries (effort-major); *decodable_out (optional)
 * receives the decodable-trial count. */
pb_status_t pb_run_mdr(const pb_code_t* code, const pb_mdr_params_t* params,
                       pb_mdr_cell_t* cells_out, int64_t* decodable_out);

/* CSV writers; comment lines are emitted with a leading "# ". */
pb_status_t pb_write_bler_csv(const char* path, const char* const* comments,
                              int32_t n_comments, const pb_bler_point_t* points, int32_t n);

typedef struct pb_mdr_row {
  const char* method;
  int32_t effort;
  int32_t b;
  double mdr;
  int64_t misses;
  int64_t trials;
} pb_mdr_row_t;

pb_status_t pb_write_mdr_csv(const char* path, const char* const* comments,
                             int32_t n_comments, const pb_mdr_row_t* rows, int32_t n);

#ifdef __cplusplus
}
#endif

#endif /* POLARBLIND_H */
