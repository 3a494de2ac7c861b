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

#ifndef CWI_EVALUATION_H_
#define CWI_EVALUATION_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cwi/decision_tree.h"
#include "cwi/features.h"
#include "cwi/metrics.h"
#include "cwi/model_io.h"

namespace cwi {

// A fitted model that scores feature vectors.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double ProbabilityComplex(const FeatureVector &fv) const = 0;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;
  // `seed` replaces any seed in the learner's own configuration.
  virtual std::unique_ptr<Scorer> Fit(const FeatureDataset &train,
                                      std::uint64_t seed) const = 0;
};

enum class LearnerKind { kNaiveBayes, kTree, kForest, kOracle };

// "nb", "tree", "forest" and the test hook "oracle". Throws kBadConfig.
LearnerKind ParseLearnerKind(std::string_view name);
std::string_view LearnerKindName(LearnerKind kind);

// The trained model a learner kind produces on `train`. The tree learner
// is a single unbagged tree over every active feature. For tree and forest
// the features per split are capped at the active feature count.
Model TrainModel(LearnerKind kind, const FeatureDataset &train,
                 const TrainConfig &config, int num_threads = 1);

// Learner wrapper around TrainModel; kOracle gives a scorer that returns
// each vector's own gold label (a test hook for the evaluation harness).
std::unique_ptr<Learner> MakeLearner(LearnerKind kind, TrainConfig config,
                                     int num_threads = 1);

// Strict weak order on feature content then label. Used to make fold
// assignment and training order independent of input order.
bool CanonicalLess(const FeatureVector &a, const FeatureVector &b);

struct FoldAssignment {
  std::vector<int> fold_of;  // Per instance, in [0, k).
  int k = 0;
  std::uint64_t seed = 0;
};

// Within each class, instances (in canonical order) are shuffled by a
// seed-derived permutation and dealt round-robin into k folds. Throws kBadK
// for k < 2 and kTooFewPerClass when a class has fewer than k members.
FoldAssignment StratifiedKFold(const FeatureDataset &data, int k,
                               std::uint64_t seed);

struct CrossValidationResult {
  ConfusionMatrix pooled;
  ClassMetrics metrics;
};

// k-fold cross-validation. Held-out predictions from every fold are pooled
// into one confusion matrix. Each fold's learner seed derives from (seed,
// feature mask, fold).
CrossValidationResult CrossValidate(const Learner &learner,
                                    const FeatureDataset &data, int k,
                                    std::uint64_t seed, double threshold = 0.5);

}  // namespace cwi

#endif  // CWI_EVALUATION_H_
