#pragma once

#include <optional>

#include "core/polar_code.hpp"

namespace pb {

// Successive-cancellation list decoding in the LLR domain.  Arrays are
// shared between paths and copied lazily on write, so cloning a path costs
// O(1) plus the copies that later writes actually force.
//
// Path metrics accumulate |llr| whenever a decision opposes the sign of its
// decision LLR (frozen bits included); lower is better.  When pruning, ties
// resolve toward the lower path index, then bit 0.
class SclDecoder {
 public:
  SclDecoder(const PolarCode& code, int list_size);

  struct Path {
    Bits u_hat;
    double path_metric = 0.0;
    bool crc_ok = false;
  };

  // All surviving paths, best (lowest) metric first; ties keep the lower
  // path index earlier.  The crc_ok flag is filled when the code carries
  // the 16-bit CRC.  The reference stays valid until the next decode call.
  const std::vector<Path>& decode_list(const Llrs& llrs);

  // With use_crc: the best CRC-passing path, or nullopt when none passes.
  // Without: the best path unconditionally.
  std::optional<Path> decode(const Llrs& llrs, bool use_crc);

  int list_size() const { return L_; }

 private:
  int writable_slot(int level, int path);
  void init(const Llrs& llrs);
  int clone_path(int path);
  void kill_path(int path);
  void set_bit(int path, int phi, std::uint8_t bit);
  void calc_llrs(int level, int phase);
  void update_bits(int level, int phase);
  void continue_frozen(int phi);
  void continue_info(int phi);

  const PolarCode* code_;
  int L_;
  int n_, N_;

  // Per level: slot arrays plus the sharing bookkeeping.
  std::vector<std::vector<Llrs>> llr_;                 // [level][slot]
  std::vector<std::vector<Bits>> bits_;                // [level][slot], 2 columns
  std::vector<std::vector<int>> path_slot_;            // [level][path]
  std::vector<std::vector<int>> ref_;                  // [level][slot]
  std::vector<std::vector<int>> free_slots_;           // [level]

  std::vector<std::uint8_t> active_;
  std::vector<int> free_paths_;
  std::vector<double> pm_;
  std::vector<Bits> decisions_;

  // Scratch for the fork step.
  std::vector<double> pm0_, pm1_;
  std::vector<std::uint8_t> keep0_, keep1_;

  std::vector<Path> out_;
};

std::optional<Bits> scl_decode(const PolarCode& code, const Llrs& llrs, int list_size,
                               bool use_crc);

}  // namespace pb
