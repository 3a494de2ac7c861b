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

#ifndef CWI_RANDOM_FOREST_H_
#define CWI_RANDOM_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cwi/decision_tree.h"
#include "cwi/features.h"

namespace cwi {

struct RandomForestModel {
  std::vector<DecisionTree> trees;
  TrainConfig config;
  FeatureMask feature_mask;

  bool operator==(const RandomForestModel &) const = default;
};

// Seed of tree `tree_index`'s random stream. The stream first draws the
// bootstrap sample, then the per-node feature subsets.
std::uint64_t TreeStreamSeed(std::uint64_t seed, int tree_index);

// Rows tree `tree_index` trains on: a bootstrap sample of size `n` when
// config.bootstrap is set, otherwise 0..n-1.
std::vector<std::size_t> TreeTrainingRows(const TrainConfig &config,
                                          int tree_index, std::size_t n);

// Trains config.num_trees trees. Each tree depends only on (data, config,
// tree index), so the model is identical for every `num_threads`.
RandomForestModel TrainForest(const FeatureDataset &data,
                              const TrainConfig &config, int num_threads = 1);

// Fraction of trees voting complex. Throws kMissingFeature if an active
// feature of `fv` is undefined.
double PredictProba(const RandomForestModel &model, const FeatureVector &fv);

// Throws kMissingFeature if an active numeric feature is NaN or an active
// POS tag is empty.
void CheckFeatures(FeatureMask mask, const FeatureVector &fv);

}  // namespace cwi

#endif  // CWI_RANDOM_FOREST_H_
