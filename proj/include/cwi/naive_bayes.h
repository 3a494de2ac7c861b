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

#ifndef CWI_NAIVE_BAYES_H_
#define CWI_NAIVE_BAYES_H_

#include <array>
#include <string>
#include <vector>

#include "cwi/features.h"

namespace cwi {

struct GaussianParams {
  double mean = 0.0;
  double variance = 1.0;

  bool operator==(const GaussianParams &) const = default;
};

// Gaussian likelihoods for numeric features, Laplace-smoothed category
// frequencies for the POS tag, Laplace-smoothed class priors.
struct NaiveBayesModel {
  FeatureMask feature_mask;
  std::array<double, 2> priors = {0.5, 0.5};
  // Indexed by canonical feature index, then class. Only active numeric
  // features are meaningful.
  std::array<std::array<GaussianParams, 2>, kNumFeatures> gaussians{};
  std::array<double, kNumFeatures> variance_floors{};
  // Tags observed anywhere in training, sorted, with P(tag | class).
  std::vector<std::string> categories;
  std::array<std::vector<double>, 2> category_probs;
  // P(tag | class) for a tag never seen in training.
  std::array<double, 2> unseen_category_probs = {0.0, 0.0};

  bool operator==(const NaiveBayesModel &) const = default;
};

// Relative variance floor: floor = kVarianceFloorScale * (global variance +
// kVarianceFloorOffset).
inline constexpr double kVarianceFloorScale = 1e-9;
inline constexpr double kVarianceFloorOffset = 1e-12;

// Throws kUnlabeledData, or kSingleClassData unless both classes occur.
NaiveBayesModel TrainNaiveBayes(const FeatureDataset &data);

// Posterior probability of the complex class.
double PredictNaiveBayes(const NaiveBayesModel &model, const FeatureVector &fv);

// Unnormalized log joint log P(class) + sum log P(feature | class).
std::array<double, 2> NaiveBayesLogJoint(const NaiveBayesModel &model,
                                         const FeatureVector &fv);

}  // namespace cwi

#endif  // CWI_NAIVE_BAYES_H_
