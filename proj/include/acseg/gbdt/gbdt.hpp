#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acseg/core/feature_matrix.hpp"
#include "acseg/core/prob_map.hpp"

namespace acseg::gbdt {

// Binary split node or leaf. Comparison rule: go left iff value < threshold.
struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double leaf_value = 0.0;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root; empty tree predicts 0

  double predict_row(const float* row) const {
    if (nodes.empty()) return 0.0;
    int idx = 0;
    while (nodes[idx].feature >= 0)
      idx = row[nodes[idx].feature] < nodes[idx].threshold ? nodes[idx].left : nodes[idx].right;
    return nodes[idx].leaf_value;
  }
};

struct TrainConfig {
  int rounds = 200;
  int depth = 2;
  double shrinkage = 0.1;
  double subsample = 1.0;    // per-round row subsample rate
  int bins = 256;            // quantile sketch resolution
  bool class_balance = false;
  std::uint64_t seed = 0;    // only used when subsample < 1
  int threads = 0;           // 0 = hardware concurrency
  double reg_lambda = 1e-3;
  double leaf_clamp = 4.0;
  double min_child_hessian = 1e-6;
  int min_samples_leaf = 1;
  double early_stop_tol = 1e-7;  // on mean training loss
  int early_stop_patience = 10;
};

// Multiclass gradient-boosted depth-limited trees with softmax cross-entropy.
// One scalar-output tree per class per round; probabilities are the softmax of
// accumulated shrinkage-weighted leaf scores.
class TreeEnsemble {
 public:
  int num_classes = 0;
  int dim = 0;
  double shrinkage = 0.1;
  int rounds_used = 0;
  std::vector<DecisionTree> trees;  // round-major: trees[round * num_classes + c]
  std::vector<std::string> warnings;
  std::vector<double> loss_curve;  // mean training loss; [0] before any round

  const DecisionTree& tree(int round, int c) const { return trees[round * num_classes + c]; }

  // Adds this ensemble's scores (shrinkage applied) onto `scores[num_classes]`.
  void accumulate_scores(const float* row, double* scores) const;

  ProbMap predict_proba(const FeatureMatrix& features) const;
};

// Training entry point. `weights` may be empty (all ones). Labels must be in
// 0..C-1; the caller removes ignored elements beforehand.
TreeEnsemble train_ensemble(const FeatureMatrix& features,
                            const std::vector<std::int32_t>& labels,
                            const std::vector<double>& weights, int num_classes,
                            const TrainConfig& cfg);

}  // namespace acseg::gbdt
