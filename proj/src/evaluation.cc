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

#include "cwi/evaluation.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cwi/error.h"
#include "cwi/prediction.h"
#include "cwi/random.h"

namespace cwi {
namespace {

class ModelScorer : public Scorer {
 public:
  explicit ModelScorer(Model model) : model_(std::move(model)) {}
  double ProbabilityComplex(const FeatureVector &fv) const override {
    return PredictProbability(model_, fv);
  }

 private:
  Model model_;
};

class OracleScorer : public Scorer {
 public:
  double ProbabilityComplex(const FeatureVector &fv) const override {
    if (!fv.label) {
      throw Error(ErrorCode::kUnlabeledData, "oracle needs gold labels");
    }
    return *fv.label == Label::kComplex ? 1.0 : 0.0;
  }
};

class StandardLearner : public Learner {
 public:
  StandardLearner(LearnerKind kind, TrainConfig config, int num_threads)
      : kind_(kind), config_(config), num_threads_(num_threads) {}

  std::string name() const override { return std::string(LearnerKindName(kind_)); }

  std::unique_ptr<Scorer> Fit(const FeatureDataset &train,
                              std::uint64_t seed) const override {
    if (kind_ == LearnerKind::kOracle) return std::make_unique<OracleScorer>();
    TrainConfig config = config_;
    config.seed = seed;
    return std::make_unique<ModelScorer>(
        TrainModel(kind_, train, config, num_threads_));
  }

 private:
  LearnerKind kind_;
  TrainConfig config_;
  int num_threads_;
};

auto ContentKey(const FeatureVector &v) {
  return std::tie(v.log_frequency, v.pos_tag, v.synonym_count,
                  v.inverse_length, v.concreteness);
}

std::vector<std::size_t> CanonicalOrder(const FeatureDataset &data) {
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return CanonicalLess(data[a], data[b]);
                   });
  return order;
}

}  // namespace

LearnerKind ParseLearnerKind(std::string_view name) {
  if (name == "nb") return LearnerKind::kNaiveBayes;
  if (name == "tree") return LearnerKind::kTree;
  if (name == "forest") return LearnerKind::kForest;
  if (name == "oracle") return LearnerKind::kOracle;
  throw Error(ErrorCode::kBadConfig,
              "unknown learner '" + std::string(name) + "'");
}

std::string_view LearnerKindName(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kNaiveBayes: return "nb";
    case LearnerKind::kTree: return "tree";
    case LearnerKind::kForest: return "forest";
    case LearnerKind::kOracle: return "oracle";
  }
  return "?";
}

Model TrainModel(LearnerKind kind, const FeatureDataset &train,
                 const TrainConfig &config, int num_threads) {
  const int active = train.mask().count();
  switch (kind) {
    case LearnerKind::kNaiveBayes:
      return TrainNaiveBayes(train);
    case LearnerKind::kTree: {
      TrainConfig tree = config;
      tree.num_trees = 1;
      tree.bootstrap = false;
      tree.features_per_split = active;
      return TrainForest(train, tree, 1);
    }
    case LearnerKind::kForest: {
      TrainConfig forest = config;
      forest.features_per_split = std::min(forest.features_per_split, active);
      return TrainForest(train, forest, num_threads);
    }
    case LearnerKind::kOracle:
      break;
  }
  throw Error(ErrorCode::kBadConfig, "the oracle learner has no model");
}

std::unique_ptr<Learner> MakeLearner(LearnerKind kind, TrainConfig config,
                                     int num_threads) {
  return std::make_unique<StandardLearner>(kind, config, num_threads);
}

bool CanonicalLess(const FeatureVector &a, const FeatureVector &b) {
  if (ContentKey(a) != ContentKey(b)) return ContentKey(a) < ContentKey(b);
  const int la = a.label ? ToInt(*a.label) : -1;
  const int lb = b.label ? ToInt(*b.label) : -1;
  return la < lb;
}

FoldAssignment StratifiedKFold(const FeatureDataset &data, int k,
                               std::uint64_t seed) {
  if (k < 2) {
    throw Error(ErrorCode::kBadK, "cross-validation needs k >= 2, got " +
                                      std::to_string(k));
  }
  if (!data.labeled()) {
    throw Error(ErrorCode::kUnlabeledData, "stratification needs labels");
  }
  FoldAssignment folds;
  folds.k = k;
  folds.seed = seed;
  folds.fold_of.assign(data.size(), 0);

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i : CanonicalOrder(data)) {
    by_class[ToInt(*data[i].label)].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    std::vector<std::size_t> &members = by_class[c];
    if (members.size() < static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kTooFewPerClass,
                  "class " + std::to_string(c) + " has " +
                      std::to_string(members.size()) + " instances, fewer than k=" +
                      std::to_string(k));
    }
    Rng rng(DeriveSeed(seed, {static_cast<std::uint64_t>(c)}));
    rng.Shuffle(members);
    for (std::size_t j = 0; j < members.size(); ++j) {
      folds.fold_of[members[j]] = static_cast<int>(j % static_cast<std::size_t>(k));
    }
  }
  return folds;
}

CrossValidationResult CrossValidate(const Learner &learner,
                                    const FeatureDataset &data, int k,
                                    std::uint64_t seed, double threshold) {
  const FoldAssignment folds = StratifiedKFold(data, k, seed);
  const std::vector<std::size_t> order = CanonicalOrder(data);

  CrossValidationResult result;
  for (int fold = 0; fold < k; ++fold) {
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (std::size_t i : order) {
      (folds.fold_of[i] == fold ? test_rows : train_rows).push_back(i);
    }
    try {
      const std::uint64_t fold_seed = DeriveSeed(
          seed, {data.mask().bits(), static_cast<std::uint64_t>(fold)});
      std::unique_ptr<Scorer> scorer =
          learner.Fit(data.Select(train_rows), fold_seed);
      std::vector<Label> predicted;
      std::vector<Label> gold;
      for (std::size_t i : test_rows) {
        predicted.push_back(
            Classify(scorer->ProbabilityComplex(data[i]), threshold)
                .predicted_label);
        gold.push_back(*data[i].label);
      }
      result.pooled += Confusion(predicted, gold);
    } catch (const Error &e) {
      Rethrow(e, "fold " + std::to_string(fold));
    }
  }
  result.metrics = ComputeClassMetrics(result.pooled);
  return result;
}

}  // namespace cwi
