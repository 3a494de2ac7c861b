// Copyright 2026 The CWI Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWI_DECISION_TREE_H_
#define CWI_DECISION_TREE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwi/features.h"
#include "cwi/random.h"

namespace cwi {

// Binary Shannon entropy in bits, with 0 log 0 = 0. Throws kEmptyCounts when
// both counts are zero.
double Entropy(std::size_t count0, std::size_t count1);

// Gains at or below this are treated as no gain.
inline constexpr double kMinGain = 1e-12;

struct TrainConfig {
  int num_trees = 100;
  int features_per_split = 3;
  int max_depth = 0;  // 0 means unlimited.
  int min_leaf_size = 2;
  std::uint64_t seed = 42;
  // Draw a bootstrap sample per tree. Off only for the single-tree learner
  // and tests.
  bool bootstrap = true;

  // Throws kBadConfig if a field is out of range for `mask`.
  void Validate(FeatureMask mask) const;

  bool operator==(const TrainConfig &) const = default;
};

// Column-major copy of a labeled FeatureDataset used during induction.
// Categorical values are interned; `categories` holds the names by id.
class TrainingColumns {
 public:
  explicit TrainingColumns(const FeatureDataset &data);

  std::size_t size() const { return labels_.size(); }
  FeatureMask mask() const { return mask_; }
  int label(std::size_t row) const { return labels_[row]; }
  double numeric(FeatureId id, std::size_t row) const {
    return numeric_[Index(id)][row];
  }
  int category(std::size_t row) const { return category_ids_[row]; }
  const std::string &category_name(int id) const { return categories_[id]; }
  std::size_t category_count() const { return categories_.size(); }

 private:
  FeatureMask mask_;
  std::vector<int> labels_;
  std::array<std::vector<double>, kNumFeatures> numeric_;
  std::vector<int> category_ids_;
  std::vector<std::string> categories_;
};

struct Split {
  FeatureId feature = FeatureId::kLogFrequency;
  double gain = 0.0;
  // Numeric splits: value <= threshold goes left.
  double threshold = 0.0;
  // Categorical splits: one branch per observed category, sorted by name.
  std::vector<std::string> categories;

  bool categorical() const { return IsCategorical(feature); }
};

// Best information-gain split of `rows` over `candidates`. Numeric features
// are tried at midpoints between consecutive distinct values; the
// categorical feature is split multiway by category. A split is admissible
// if every numeric child, or at least two categorical branches, hold at
// least `min_leaf` rows. Returns nullopt when no admissible split has gain
// above kMinGain. Ties keep the earlier candidate, then the lower threshold.
std::optional<Split> BestSplit(const TrainingColumns &columns,
                               std::span<const std::size_t> rows,
                               std::span<const FeatureId> candidates,
                               int min_leaf = 1);

// Convenience overload over every row and every active feature. Throws
// kUnlabeledData for unlabeled input.
std::optional<Split> BestSplit(const FeatureDataset &data, int min_leaf = 1);

class DecisionTree {
 public:
  enum class NodeKind { kLeaf, kNumeric, kCategorical };

  struct Node {
    NodeKind kind = NodeKind::kLeaf;
    FeatureId feature = FeatureId::kLogFrequency;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    // Categorical: (category, child) sorted by category, plus the child that
    // received the most training rows.
    std::vector<std::pair<std::string, int>> branches;
    int default_child = -1;
    // Training class counts reaching this node.
    std::array<std::size_t, 2> counts = {0, 0};

    bool operator==(const Node &) const = default;
  };

  DecisionTree() = default;
  explicit DecisionTree(std::vector<Node> nodes);

  // Nodes in preorder; index 0 is the root.
  const std::vector<Node> &nodes() const { return nodes_; }

  // Index of the leaf that `fv` reaches. Unseen categories follow the
  // default child.
  int LeafIndex(const FeatureVector &fv) const;

  // Majority class of the reached leaf; ties vote complex.
  Label Vote(const FeatureVector &fv) const;

  int depth() const;
  std::size_t leaf_count() const;

  bool operator==(const DecisionTree &) const = default;

 private:
  std::vector<Node> nodes_;
};

// Grows a tree on `rows` (duplicates allowed, as in a bootstrap sample). When
// config.features_per_split is smaller than the number of active features,
// each node draws that many candidates uniformly from `rng`.
DecisionTree GrowTree(const TrainingColumns &columns,
                      std::span<const std::size_t> rows,
                      const TrainConfig &config, Rng &rng);

// Grows a tree on every vector of `data`. Throws kUnlabeledData.
DecisionTree TrainTree(const FeatureDataset &data, const TrainConfig &config,
                       Rng &rng);

}  // namespace cwi

#endif  // CWI_DECISION_TREE_H_
