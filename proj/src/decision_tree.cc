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

#include "cwi/decision_tree.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cwi/error.h"

namespace cwi {
namespace {

double PlogP(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Size-weighted mean entropy of the parts of a split.
double WeightedChildEntropy(std::span<const std::array<std::size_t, 2>> parts,
                            std::size_t total) {
  double h = 0.0;
  for (const auto &c : parts) {
    const std::size_t n = c[0] + c[1];
    if (n == 0) continue;
    h += static_cast<double>(n) / static_cast<double>(total) * Entropy(c[0], c[1]);
  }
  return h;
}

struct Candidate {
  double gain = 0.0;
  double threshold = 0.0;
  bool found = false;
};

Candidate BestNumericSplit(const TrainingColumns &columns,
                           std::span<const std::size_t> rows, FeatureId feature,
                           const std::array<std::size_t, 2> &parent,
                           double parent_entropy, int min_leaf) {
  std::vector<std::pair<double, int>> sorted;
  sorted.reserve(rows.size());
  for (std::size_t row : rows) {
    sorted.emplace_back(columns.numeric(feature, row), columns.label(row));
  }
  std::sort(sorted.begin(), sorted.end());

  const std::size_t n = sorted.size();
  const std::size_t min_size = static_cast<std::size_t>(min_leaf);
  Candidate best;
  std::array<std::array<std::size_t, 2>, 2> parts = {{{0, 0}, parent}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int y = sorted[i].second;
    ++parts[0][y];
    --parts[1][y];
    const double lo = sorted[i].first;
    const double hi = sorted[i + 1].first;
    if (lo == hi) continue;
    if (i + 1 < min_size || n - i - 1 < min_size) continue;
    const double gain = parent_entropy - WeightedChildEntropy(parts, n);
    if (!best.found || gain > best.gain + kMinGain) {
      double mid = lo + (hi - lo) / 2.0;
      if (!(mid < hi)) mid = lo;
      best = {gain, mid, true};
    }
  }
  return best;
}

}  // namespace

double Entropy(std::size_t count0, std::size_t count1) {
  const std::size_t n = count0 + count1;
  if (n == 0) throw Error(ErrorCode::kEmptyCounts, "entropy of no items");
  const double p = static_cast<double>(count0) / static_cast<double>(n);
  const double q = static_cast<double>(count1) / static_cast<double>(n);
  const double h = -(PlogP(p) + PlogP(q));
  return h > 0.0 ? h : 0.0;
}

void TrainConfig::Validate(FeatureMask mask) const {
  auto fail = [](const std::string &why) {
    throw Error(ErrorCode::kBadConfig, why);
  };
  if (num_trees < 1) fail("num_trees must be positive");
  if (features_per_split < 1) fail("features_per_split must be positive");
  if (features_per_split > mask.count()) {
    fail("features_per_split " + std::to_string(features_per_split) +
         " exceeds the " + std::to_string(mask.count()) + " active features");
  }
  if (max_depth < 0) fail("max_depth must be positive or 0 for unlimited");
  if (min_leaf_size < 1) fail("min_leaf_size must be positive");
}

TrainingColumns::TrainingColumns(const FeatureDataset &data)
    : mask_(data.mask()) {
  if (!data.labeled()) {
    throw Error(ErrorCode::kUnlabeledData, "training data has no labels");
  }
  const std::size_t n = data.size();
  labels_.reserve(n);
  for (const FeatureVector &v : data.vectors()) labels_.push_back(ToInt(*v.label));
  for (FeatureId id : mask_.Features()) {
    if (IsCategorical(id)) {
      std::unordered_map<std::string, int> interned;
      category_ids_.reserve(n);
      for (const FeatureVector &v : data.vectors()) {
        auto [it, inserted] =
            interned.emplace(v.pos_tag, static_cast<int>(categories_.size()));
        if (inserted) categories_.push_back(v.pos_tag);
        category_ids_.push_back(it->second);
      }
    } else {
      std::vector<double> &column = numeric_[Index(id)];
      column.reserve(n);
      for (const FeatureVector &v : data.vectors()) {
        column.push_back(v.Numeric(id));
      }
    }
  }
}

std::optional<Split> BestSplit(const TrainingColumns &columns,
                               std::span<const std::size_t> rows,
                               std::span<const FeatureId> candidates,
                               int min_leaf) {
  if (rows.size() < 2) return std::nullopt;
  std::array<std::size_t, 2> parent = {0, 0};
  for (std::size_t row : rows) ++parent[columns.label(row)];
  const double parent_entropy = Entropy(parent[0], parent[1]);
  if (parent_entropy <= 0.0) return std::nullopt;

  std::optional<Split> best;
  auto consider = [&](Split split) {
    if (split.gain <= kMinGain) return;
    if (!best || split.gain > best->gain + kMinGain) best = std::move(split);
  };

  const std::size_t min_size = static_cast<std::size_t>(min_leaf);
  for (FeatureId feature : candidates) {
    if (!columns.mask().Contains(feature)) {
      throw Error(ErrorCode::kMissingFeature,
                  std::string(FeatureName(feature)) + " is not active");
    }
    if (IsCategorical(feature)) {
      std::vector<std::array<std::size_t, 2>> by_category(
          columns.category_count(), {0, 0});
      for (std::size_t row : rows) {
        ++by_category[columns.category(row)][columns.label(row)];
      }
      std::vector<std::string> present;
      std::vector<std::array<std::size_t, 2>> parts;
      int large_branches = 0;
      for (std::size_t id = 0; id < by_category.size(); ++id) {
        const auto &c = by_category[id];
        if (c[0] + c[1] == 0) continue;
        present.push_back(columns.category_name(static_cast<int>(id)));
        parts.push_back(c);
        if (c[0] + c[1] >= min_size) ++large_branches;
      }
      if (present.size() < 2 || large_branches < 2) continue;
      std::sort(present.begin(), present.end());
      Split split;
      split.feature = feature;
      split.gain = parent_entropy - WeightedChildEntropy(parts, rows.size());
      split.categories = std::move(present);
      consider(std::move(split));
    } else {
      Candidate c = BestNumericSplit(columns, rows, feature, parent,
                                     parent_entropy, min_leaf);
      if (!c.found) continue;
      Split split;
      split.feature = feature;
      split.gain = c.gain;
      split.threshold = c.threshold;
      consider(std::move(split));
    }
  }
  return best;
}

std::optional<Split> BestSplit(const FeatureDataset &data, int min_leaf) {
  TrainingColumns columns(data);
  std::vector<std::size_t> rows(data.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<FeatureId> candidates = data.mask().Features();
  return BestSplit(columns, rows, candidates, min_leaf);
}

// ---------------------------------------------------------------------------

DecisionTree::DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

int DecisionTree::LeafIndex(const FeatureVector &fv) const {
  int index = 0;
  while (true) {
    const Node &node = nodes_[index];
    switch (node.kind) {
      case NodeKind::kLeaf:
        return index;
      case NodeKind::kNumeric:
        index = fv.Numeric(node.feature) <= node.threshold ? node.left
                                                           : node.right;
        break;
      case NodeKind::kCategorical: {
        auto it = std::lower_bound(
            node.branches.begin(), node.branches.end(), fv.pos_tag,
            [](const auto &branch, const std::string &key) {
              return branch.first < key;
            });
        index = (it != node.branches.end() && it->first == fv.pos_tag)
                    ? it->second
                    : node.default_child;
        break;
      }
    }
  }
}

Label DecisionTree::Vote(const FeatureVector &fv) const {
  const Node &leaf = nodes_[LeafIndex(fv)];
  return leaf.counts[1] >= leaf.counts[0] ? Label::kComplex : Label::kSimple;
}

int DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  // Preorder: children always follow their parent.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node &node = nodes_[i];
    deepest = std::max(deepest, depth[i]);
    auto mark = [&](int child) {
      if (child >= 0) depth[child] = depth[i] + 1;
    };
    mark(node.left);
    mark(node.right);
    for (const auto &branch : node.branches) mark(branch.second);
  }
  return deepest;
}

std::size_t DecisionTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(),
                    [](const Node &n) { return n.kind == NodeKind::kLeaf; }));
}

namespace {

class TreeGrower {
 public:
  TreeGrower(const TrainingColumns &columns, const TrainConfig &config,
             Rng &rng)
      : columns_(columns),
        config_(config),
        rng_(rng),
        active_(columns.mask().Features()) {}

  std::vector<DecisionTree::Node> Grow(std::vector<std::size_t> rows) {
    Build(std::move(rows), 0);
    return std::move(nodes_);
  }

 private:
  std::vector<FeatureId> DrawCandidates() {
    const std::size_t want = static_cast<std::size_t>(config_.features_per_split);
    if (want >= active_.size()) return active_;
    std::vector<FeatureId> pool = active_;
    for (std::size_t i = 0; i < want; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng_.Below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(want);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  int Build(std::vector<std::size_t> rows, int depth) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    std::array<std::size_t, 2> counts = {0, 0};
    for (std::size_t row : rows) ++counts[columns_.label(row)];
    nodes_[index].counts = counts;

    if (counts[0] == 0 || counts[1] == 0) return index;
    if (config_.max_depth > 0 && depth >= config_.max_depth) return index;

    std::vector<FeatureId> candidates = DrawCandidates();
    std::optional<Split> split =
        BestSplit(columns_, rows, candidates, config_.min_leaf_size);
    if (!split) return index;

    if (!split->categorical()) {
      std::vector<std::size_t> left, right;
      for (std::size_t row : rows) {
        (columns_.numeric(split->feature, row) <= split->threshold ? left
                                                                   : right)
            .push_back(row);
      }
      rows.clear();
      rows.shrink_to_fit();
      const int l = Build(std::move(left), depth + 1);
      const int r = Build(std::move(right), depth + 1);
      DecisionTree::Node &node = nodes_[index];
      node.kind = DecisionTree::NodeKind::kNumeric;
      node.feature = split->feature;
      node.threshold = split->threshold;
      node.left = l;
      node.right = r;
      return index;
    }

    // Categorical multiway split, branches in category-name order.
    std::unordered_map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < split->categories.size(); ++i) {
      slot.emplace(split->categories[i], i);
    }
    std::vector<std::vector<std::size_t>> groups(split->categories.size());
    for (std::size_t row : rows) {
      groups[slot.at(columns_.category_name(columns_.category(row)))]
          .push_back(row);
    }
    rows.clear();
    rows.shrink_to_fit();
    std::vector<std::pair<std::string, int>> branches;
    int default_child = -1;
    std::size_t default_size = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const std::size_t size = groups[i].size();
      const int child = Build(std::move(groups[i]), depth + 1);
      branches.emplace_back(split->categories[i], child);
      if (default_child < 0 || size > default_size) {
        default_child = child;
        default_size = size;
      }
    }
    DecisionTree::Node &node = nodes_[index];
    node.kind = DecisionTree::NodeKind::kCategorical;
    node.feature = split->feature;
    node.branches = std::move(branches);
    node.default_child = default_child;
    return index;
  }

  const TrainingColumns &columns_;
  const TrainConfig &config_;
  Rng &rng_;
  std::vector<FeatureId> active_;
  std::vector<DecisionTree::Node> nodes_;
};

}  // namespace

DecisionTree GrowTree(const TrainingColumns &columns,
                      std::span<const std::size_t> rows,
                      const TrainConfig &config, Rng &rng) {
  if (rows.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "cannot grow a tree on no rows");
  }
  config.Validate(columns.mask());
  TreeGrower grower(columns, config, rng);
  return DecisionTree(
      grower.Grow(std::vector<std::size_t>(rows.begin(), rows.end())));
}

DecisionTree TrainTree(const FeatureDataset &data, const TrainConfig &config,
                       Rng &rng) {
  TrainingColumns columns(data);
  std::vector<std::size_t> rows(data.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return GrowTree(columns, rows, config, rng);
}

}  // namespace cwi
