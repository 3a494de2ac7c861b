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

#include "cwi/random_forest.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cwi/error.h"

namespace cwi {
namespace {

std::vector<std::size_t> DrawRows(const TrainConfig &config, Rng &rng,
                                  std::size_t n) {
  std::vector<std::size_t> rows(n);
  if (config.bootstrap) {
    for (std::size_t &row : rows) row = static_cast<std::size_t>(rng.Below(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  }
  return rows;
}

}  // namespace

std::uint64_t TreeStreamSeed(std::uint64_t seed, int tree_index) {
  return DeriveSeed(seed, {static_cast<std::uint64_t>(tree_index)});
}

std::vector<std::size_t> TreeTrainingRows(const TrainConfig &config,
                                          int tree_index, std::size_t n) {
  Rng rng(TreeStreamSeed(config.seed, tree_index));
  return DrawRows(config, rng, n);
}

RandomForestModel TrainForest(const FeatureDataset &data,
                              const TrainConfig &config, int num_threads) {
  if (data.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "cannot train on no vectors");
  }
  config.Validate(data.mask());
  const TrainingColumns columns(data);

  RandomForestModel model;
  model.config = config;
  model.feature_mask = data.mask();
  model.trees.resize(static_cast<std::size_t>(config.num_trees));

  auto grow = [&](int i) {
    Rng rng(TreeStreamSeed(config.seed, i));
    std::vector<std::size_t> rows = DrawRows(config, rng, data.size());
    model.trees[static_cast<std::size_t>(i)] =
        GrowTree(columns, rows, config, rng);
  };

  const int workers = std::clamp(num_threads, 1, config.num_trees);
  if (workers == 1) {
    for (int i = 0; i < config.num_trees; ++i) grow(i);
    return model;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < config.num_trees; i = next++) {
        try {
          grow(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return model;
}

void CheckFeatures(FeatureMask mask, const FeatureVector &fv) {
  for (FeatureId id : mask.Features()) {
    const bool missing =
        IsCategorical(id) ? fv.pos_tag.empty() : std::isnan(fv.Numeric(id));
    if (missing) {
      throw Error(ErrorCode::kMissingFeature,
                  std::string(FeatureName(id)) + " is undefined");
    }
  }
}

double PredictProba(const RandomForestModel &model, const FeatureVector &fv) {
  CheckFeatures(model.feature_mask, fv);
  std::size_t complex_votes = 0;
  for (const DecisionTree &tree : model.trees) {
    if (tree.Vote(fv) == Label::kComplex) ++complex_votes;
  }
  return static_cast<double>(complex_votes) /
         static_cast<double>(model.trees.size());
}

}  // namespace cwi
