#include "decode/fastssc.hpp"

#include <stdexcept>

#include "decode/sc.hpp"

namespace pb {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kRate0: return "RATE0";
    case NodeKind::kRate1: return "RATE1";
    case NodeKind::kRep: return "REP";
    case NodeKind::kSpc: return "SPC";
    case NodeKind::kInternal: return "INTERNAL";
  }
  return "?";
}

int FastSscTree::contributing_leaves(bool include_spc) const {
  int count = 0;
  for (int idx : leaves) {
    const NodeKind k = nodes[idx].kind;
    if (k == NodeKind::kRate0 || k == NodeKind::kRep ||
        (include_spc && k == NodeKind::kSpc)) {
      ++count;
    }
  }
  return count;
}

namespace {

NodeKind classify(const PolarCode& code, int start, int size) {
  int info = 0;
  for (int i = start; i < start + size; ++i) info += code.is_info[i];
  if (info == 0) return NodeKind::kRate0;
  if (info == size) return NodeKind::kRate1;
  if (info == 1 && code.is_info[start + size - 1]) return NodeKind::kRep;
  if (info == size - 1 && !code.is_info[start]) return NodeKind::kSpc;
  return NodeKind::kInternal;
}

int build_node(const PolarCode& code, FastSscTree& tree, int level, int start) {
  const int size = code.N >> level;
  FsNode nd;
  nd.level = level;
  nd.start = start;
  nd.size = size;
  nd.kind = classify(code, start, size);
  const int idx = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(nd);
  if (nd.kind == NodeKind::kInternal) {
    const int left = build_node(code, tree, level + 1, start);
    const int right = build_node(code, tree, level + 1, start + size / 2);
    tree.nodes[idx].left = left;
    tree.nodes[idx].right = right;
  } else {
    tree.leaves.push_back(idx);
  }
  return idx;
}

}  // namespace

FastSscTree fastssc_build_tree(const PolarCode& code) {
  FastSscTree tree;
  tree.nodes.reserve(2 * code.N);
  build_node(code, tree, 0, 0);

  // Rebuild the leaf list in visit order (build_node pushes leaves in
  // left-to-right order already because recursion is depth-first).
  return tree;
}

double detect_rate0(const double* a, int size) {
  double sum = 0.0;
  for (int k = 0; k < size; ++k) sum += a[k];
  return sum / size;
}

double detect_rep(const double* a, int size) {
  double sum = 0.0;
  for (int k = 0; k < size; ++k) sum += a[k];
  return std::abs(sum) / size;
}

double detect_spc(const double* a, int size) {
  int parity = 0;
  double min_mag = std::abs(a[0]);
  for (int k = 0; k < size; ++k) {
    const double mag = std::abs(a[k]);
    if (mag < min_mag) min_mag = mag;
    parity ^= hard_decision(a[k]);
  }
  return parity ? -min_mag : min_mag;
}

FastSscDecoder::FastSscDecoder(const PolarCode& code)
    : code_(&code), tree_(fastssc_build_tree(code)) {
  alpha_.assign(code.n + 1, Llrs(code.N, 0.0));
  beta_.assign(code.n + 1, Bits(code.N, 0));
  u_hat_.assign(code.N, 0);
}

const Bits& FastSscDecoder::decode(const Llrs& llrs) {
  run(llrs, /*record=*/false, /*t_max=*/-1, /*include_spc=*/true);
  return u_hat_;
}

const std::vector<FsLeafRecord>& FastSscDecoder::detect_profile(const Llrs& llrs) {
  run(llrs, /*record=*/true, /*t_max=*/-1, /*include_spc=*/true);
  return records_;
}

FastSscDetectResult FastSscDecoder::detect(const Llrs& llrs, int t_max, bool include_spc) {
  if (t_max < 1) throw std::invalid_argument("fastssc_detect: t_max must be positive");
  run(llrs, /*record=*/false, t_max, include_spc);
  return {metric_, visited_};
}

void FastSscDecoder::run(const Llrs& llrs, bool record, int t_max, bool include_spc) {
  if (static_cast<int>(llrs.size()) != code_->N) {
    throw std::invalid_argument("fastssc: LLR vector must have N entries");
  }
  alpha_[0] = llrs;
  record_ = record;
  include_spc_ = include_spc;
  budget_ = t_max;
  metric_ = 0.0;
  visited_ = 0;
  records_.clear();
  visit(0);
}

void FastSscDecoder::leaf(const FsNode& nd) {
  const double* a = alpha_[nd.level].data() + nd.start;
  Bits& beta = beta_[nd.level];
  double contribution = 0.0;
  bool contributes = false;

  switch (nd.kind) {
    case NodeKind::kRate0: {
      for (int k = 0; k < nd.size; ++k) {
        beta[nd.start + k] = 0;
        u_hat_[nd.start + k] = 0;
      }
      contribution = detect_rate0(a, nd.size);
      contributes = true;
      break;
    }
    case NodeKind::kRate1: {
      for (int k = 0; k < nd.size; ++k) beta[nd.start + k] = hard_decision(a[k]);
      scratch_.assign(beta.begin() + nd.start, beta.begin() + nd.start + nd.size);
      polar_transform_inplace(scratch_);
      std::copy(scratch_.begin(), scratch_.end(), u_hat_.begin() + nd.start);
      break;
    }
    case NodeKind::kRep: {
      double sum = 0.0;
      for (int k = 0; k < nd.size; ++k) sum += a[k];
      const std::uint8_t b = hard_decision(sum);
      for (int k = 0; k < nd.size; ++k) {
        beta[nd.start + k] = b;
        u_hat_[nd.start + k] = 0;
      }
      u_hat_[nd.start + nd.size - 1] = b;
      contribution = std::abs(sum) / nd.size;
      contributes = true;
      break;
    }
    case NodeKind::kSpc: {
      contribution = detect_spc(a, nd.size);
      int parity = 0;
      int min_idx = 0;
      double min_mag = std::abs(a[0]);
      for (int k = 0; k < nd.size; ++k) {
        const std::uint8_t b = hard_decision(a[k]);
        beta[nd.start + k] = b;
        parity ^= b;
        const double mag = std::abs(a[k]);
        if (mag < min_mag) {
          min_mag = mag;
          min_idx = k;
        }
      }
      if (parity) beta[nd.start + min_idx] ^= 1;
      scratch_.assign(beta.begin() + nd.start, beta.begin() + nd.start + nd.size);
      polar_transform_inplace(scratch_);
      std::copy(scratch_.begin(), scratch_.end(), u_hat_.begin() + nd.start);
      contributes = include_spc_;
      break;
    }
    case NodeKind::kInternal:
      break;
  }

  if (record_ && nd.kind != NodeKind::kRate1) {
    records_.push_back({nd.kind, contribution});
  }
  if (budget_ > 0 && contributes) {
    metric_ += contribution;
    ++visited_;
    --budget_;
  }
}

bool FastSscDecoder::visit(int node_idx) {
  const FsNode& nd = tree_.nodes[node_idx];
  if (nd.kind != NodeKind::kInternal) {
    leaf(nd);
    return budget_ != 0;
  }
  const int half = nd.size / 2;
  const Llrs& a = alpha_[nd.level];
  Llrs& child = alpha_[nd.level + 1];

  for (int k = 0; k < half; ++k) {
    child[nd.start + k] = f_minsum(a[nd.start + k], a[nd.start + half + k]);
  }
  if (!visit(nd.left)) return false;

  const Bits& left_beta = beta_[nd.level + 1];
  for (int k = 0; k < half; ++k) {
    child[nd.start + half + k] =
        g_update(a[nd.start + k], a[nd.start + half + k], left_beta[nd.start + k]);
  }
  if (!visit(nd.right)) return false;

  Bits& b = beta_[nd.level];
  const Bits& cb = beta_[nd.level + 1];
  for (int k = 0; k < half; ++k) {
    b[nd.start + k] = static_cast<std::uint8_t>(cb[nd.start + k] ^ cb[nd.start + half + k]);
    b[nd.start + half + k] = cb[nd.start + half + k];
  }
  return true;
}

Bits fastssc_decode(const PolarCode& code, const Llrs& llrs) {
  FastSscDecoder dec(code);
  return dec.decode(llrs);
}

FastSscDetectResult fastssc_detect(const PolarCode& code, const Llrs& llrs, int t_max,
                                   bool include_spc) {
  FastSscDecoder dec(code);
  return dec.detect(llrs, t_max, include_spc);
}

}  // namespace pb
