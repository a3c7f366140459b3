#include "decode/scl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/crc16.hpp"
#include "decode/sc.hpp"

namespace pb {

SclDecoder::SclDecoder(const PolarCode& code, int list_size)
    : code_(&code), L_(list_size), n_(code.n), N_(code.N) {
  if (list_size < 1) throw std::invalid_argument("scl: list size must be positive");
  llr_.resize(n_ + 1);
  bits_.resize(n_ + 1);
  path_slot_.assign(n_ + 1, std::vector<int>(L_, 0));
  ref_.assign(n_ + 1, std::vector<int>(L_, 0));
  free_slots_.resize(n_ + 1);
  for (int l = 0; l <= n_; ++l) {
    const int size = N_ >> l;
    llr_[l].assign(L_, Llrs(size, 0.0));
    bits_[l].assign(L_, Bits(2 * size, 0));
  }
  active_.assign(L_, 0);
  pm_.assign(L_, 0.0);
  decisions_.assign(L_, Bits(N_, 0));
  pm0_.resize(L_);
  pm1_.resize(L_);
  keep0_.resize(L_);
  keep1_.resize(L_);
}

void SclDecoder::init(const Llrs& llrs) {
  free_paths_.clear();
  for (int p = L_ - 1; p >= 0; --p) free_paths_.push_back(p);
  active_.assign(L_, 0);
  for (int l = 0; l <= n_; ++l) {
    free_slots_[l].clear();
    for (int s = L_ - 1; s >= 0; --s) free_slots_[l].push_back(s);
    std::fill(ref_[l].begin(), ref_[l].end(), 0);
  }

  const int p0 = free_paths_.back();
  free_paths_.pop_back();
  active_[p0] = 1;
  pm_[p0] = 0.0;
  std::fill(decisions_[p0].begin(), decisions_[p0].end(), 0);
  for (int l = 0; l <= n_; ++l) {
    const int s = free_slots_[l].back();
    free_slots_[l].pop_back();
    path_slot_[l][p0] = s;
    ref_[l][s] = 1;
  }
  llr_[0][path_slot_[0][p0]] = llrs;
}

int SclDecoder::writable_slot(int level, int path) {
  const int s = path_slot_[level][path];
  if (ref_[level][s] == 1) return s;
  --ref_[level][s];
  const int f = free_slots_[level].back();
  free_slots_[level].pop_back();
  llr_[level][f] = llr_[level][s];
  bits_[level][f] = bits_[level][s];
  ref_[level][f] = 1;
  path_slot_[level][path] = f;
  return f;
}

int SclDecoder::clone_path(int path) {
  const int p = free_paths_.back();
  free_paths_.pop_back();
  active_[p] = 1;
  pm_[p] = pm_[path];
  decisions_[p] = decisions_[path];
  for (int l = 0; l <= n_; ++l) {
    const int s = path_slot_[l][path];
    path_slot_[l][p] = s;
    ++ref_[l][s];
  }
  return p;
}

void SclDecoder::kill_path(int path) {
  active_[path] = 0;
  free_paths_.push_back(path);
  for (int l = 0; l <= n_; ++l) {
    const int s = path_slot_[l][path];
    if (--ref_[l][s] == 0) free_slots_[l].push_back(s);
  }
}

void SclDecoder::calc_llrs(int level, int phase) {
  if (level == 0) return;
  if ((phase & 1) == 0) calc_llrs(level - 1, phase >> 1);
  const int size = N_ >> level;
  for (int p = 0; p < L_; ++p) {
    if (!active_[p]) continue;
    const Llrs& parent = llr_[level - 1][path_slot_[level - 1][p]];
    const int slot = writable_slot(level, p);
    Llrs& self = llr_[level][slot];
    if ((phase & 1) == 0) {
      for (int k = 0; k < size; ++k) self[k] = f_minsum(parent[k], parent[k + size]);
    } else {
      const Bits& cb = bits_[level][slot];  // column 0: left-sibling partial sums
      for (int k = 0; k < size; ++k) {
        self[k] = g_update(parent[k], parent[k + size], cb[k]);
      }
    }
  }
}

void SclDecoder::update_bits(int level, int phase) {
  // Only called with odd phase: fold the two child columns into the parent.
  const int size = N_ >> level;
  const int parent_size = 2 * size;
  const int col = (phase >> 1) & 1;
  for (int p = 0; p < L_; ++p) {
    if (!active_[p]) continue;
    const Bits& self = bits_[level][path_slot_[level][p]];
    Bits& up = bits_[level - 1][writable_slot(level - 1, p)];
    for (int k = 0; k < size; ++k) {
      up[col * parent_size + k] = static_cast<std::uint8_t>(self[k] ^ self[size + k]);
      up[col * parent_size + size + k] = self[size + k];
    }
  }
  if ((phase >> 1) & 1) update_bits(level - 1, phase >> 1);
}

void SclDecoder::set_bit(int path, int phi, std::uint8_t bit) {
  Bits& b = bits_[n_][writable_slot(n_, path)];
  b[phi & 1] = bit;
  decisions_[path][phi] = bit;
}

void SclDecoder::continue_frozen(int phi) {
  for (int p = 0; p < L_; ++p) {
    if (!active_[p]) continue;
    const double a = llr_[n_][path_slot_[n_][p]][0];
    if (a < 0.0) pm_[p] += -a;
    set_bit(p, phi, 0);
  }
}

void SclDecoder::continue_info(int phi) {
  struct Cand {
    double pm;
    int path;
    std::uint8_t bit;
  };
  static thread_local std::vector<Cand> cands;
  cands.clear();
  int n_active = 0;
  for (int p = 0; p < L_; ++p) {
    if (!active_[p]) continue;
    ++n_active;
    const double a = llr_[n_][path_slot_[n_][p]][0];
    pm0_[p] = pm_[p] + (a < 0.0 ? -a : 0.0);
    pm1_[p] = pm_[p] + (a >= 0.0 ? a : 0.0);
    cands.push_back({pm0_[p], p, 0});
    cands.push_back({pm1_[p], p, 1});
  }

  if (static_cast<int>(cands.size()) <= L_) {
    std::fill(keep0_.begin(), keep0_.end(), 1);
    std::fill(keep1_.begin(), keep1_.end(), 1);
  } else {
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
      if (x.pm != y.pm) return x.pm < y.pm;
      if (x.path != y.path) return x.path < y.path;
      return x.bit < y.bit;
    });
    std::fill(keep0_.begin(), keep0_.end(), 0);
    std::fill(keep1_.begin(), keep1_.end(), 0);
    for (int i = 0; i < L_; ++i) {
      (cands[i].bit ? keep1_ : keep0_)[cands[i].path] = 1;
    }
  }

  static thread_local std::vector<int> snapshot;
  snapshot.clear();
  for (int p = 0; p < L_; ++p) {
    if (!active_[p]) continue;
    if (!keep0_[p] && !keep1_[p]) {
      kill_path(p);
    } else {
      snapshot.push_back(p);
    }
  }

  for (int p : snapshot) {
    if (keep0_[p] && keep1_[p]) {
      const int p2 = clone_path(p);
      set_bit(p, phi, 0);
      pm_[p] = pm0_[p];
      set_bit(p2, phi, 1);
      pm_[p2] = pm1_[p];
    } else if (keep0_[p]) {
      set_bit(p, phi, 0);
      pm_[p] = pm0_[p];
    } else {
      set_bit(p, phi, 1);
      pm_[p] = pm1_[p];
    }
  }
}

const std::vector<SclDecoder::Path>& SclDecoder::decode_list(const Llrs& llrs) {
  if (static_cast<int>(llrs.size()) != N_) {
    throw std::invalid_argument("scl: LLR vector must have N entries");
  }
  init(llrs);
  for (int phi = 0; phi < N_; ++phi) {
    calc_llrs(n_, phi);
    if (code_->is_info[phi]) {
      continue_info(phi);
    } else {
      continue_frozen(phi);
    }
    if (phi & 1) update_bits(n_, phi);
  }

  static thread_local std::vector<std::pair<double, int>> order;
  order.clear();
  for (int p = 0; p < L_; ++p) {
    if (active_[p]) order.emplace_back(pm_[p], p);
  }
  std::sort(order.begin(), order.end());

  const bool has_crc = code_->C == kCrc16Bits;
  out_.clear();
  out_.reserve(order.size());
  for (const auto& [pm, p] : order) {
    Path path;
    path.u_hat = decisions_[p];
    path.path_metric = pm;
    path.crc_ok = has_crc && crc16_check(extract_info(*code_, path.u_hat));
    out_.push_back(std::move(path));
  }
  return out_;
}

std::optional<SclDecoder::Path> SclDecoder::decode(const Llrs& llrs, bool use_crc) {
  if (use_crc && code_->C != kCrc16Bits) {
    throw std::invalid_argument("scl: CRC selection needs a code built with the 16-bit CRC");
  }
  const auto& paths = decode_list(llrs);
  if (!use_crc) return paths.front();
  for (const auto& path : paths) {
    if (path.crc_ok) return path;
  }
  return std::nullopt;
}

std::optional<Bits> scl_decode(const PolarCode& code, const Llrs& llrs, int list_size,
                               bool use_crc) {
  SclDecoder dec(code, list_size);
  auto best = dec.decode(llrs, use_crc);
  if (!best) return std::nullopt;
  return std::move(best->u_hat);
}

}  // namespace pb
