#pragma once

#include <string>

#include "core/polar_code.hpp"

namespace pb {

enum class NodeKind { kRate0, kRate1, kRep, kSpc, kInternal };

const char* node_kind_name(NodeKind kind);

struct FsNode {
  int level = 0;
  int start = 0;
  int size = 0;
  NodeKind kind = NodeKind::kInternal;
  int left = -1;
  int right = -1;
};

// Pruned decoding tree.  Classification is greedy top-down with priority
// RATE0 > RATE1 > REP > SPC: a node becomes a leaf at the largest size where
// one of the patterns applies.
//  RATE0: all positions frozen.        RATE1: all positions information.
//  REP:   single information bit, at the last position of the span.
//  SPC:   single frozen bit, at the first position of the span.
struct FastSscTree {
  std::vector<FsNode> nodes;  // nodes[0] is the root
  std::vector<int> leaves;    // node indices in left-to-right visit order

  int contributing_leaves(bool include_spc) const;
};

FastSscTree fastssc_build_tree(const PolarCode& code);

// Per-leaf detection metric contribution recorded during a traversal.
struct FsLeafRecord {
  NodeKind kind;
  double contribution;  // 0 for RATE1 (never contributes)
};

struct FastSscDetectResult {
  double metric = 0.0;
  int effort = 0;  // contributing leaves actually visited
};

// Fast simplified successive cancellation.  Decisions are bit-exact with
// sc_decode; the detection profile falls out of the same traversal.
class FastSscDecoder {
 public:
  explicit FastSscDecoder(const PolarCode& code);

  const Bits& decode(const Llrs& llrs);

  // Runs the traversal and records every contributing leaf (RATE0, REP and
  // SPC) in visit order.  SPC entries are recorded unconditionally; callers
  // that exclude them simply skip those records.
  const std::vector<FsLeafRecord>& detect_profile(const Llrs& llrs);

  // Partial-traversal metric: stops once t_max contributing leaves have been
  // visited under the given configuration.
  FastSscDetectResult detect(const Llrs& llrs, int t_max, bool include_spc);

  const FastSscTree& tree() const { return tree_; }

 private:
  void run(const Llrs& llrs, bool record, int t_max, bool include_spc);
  bool visit(int node_idx);
  void leaf(const FsNode& nd);

  const PolarCode* code_;
  FastSscTree tree_;
  std::vector<Llrs> alpha_;
  std::vector<Bits> beta_;
  Bits u_hat_;
  Bits scratch_;
  std::vector<FsLeafRecord> records_;
  bool record_ = false;
  bool include_spc_ = true;
  int budget_ = -1;  // remaining contributing leaves before early stop
  double metric_ = 0.0;
  int visited_ = 0;
};

Bits fastssc_decode(const PolarCode& code, const Llrs& llrs);
FastSscDetectResult fastssc_detect(const PolarCode& code, const Llrs& llrs, int t_max,
                                   bool include_spc);

// Leaf metric updates (exposed for tests).  `a` spans `size` entries.
double detect_rate0(const double* a, int size);
double detect_rep(const double* a, int size);
double detect_spc(const double* a, int size);

}  // namespace pb
