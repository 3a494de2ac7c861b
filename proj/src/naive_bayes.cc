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

#include "cwi/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwi/error.h"
#include "cwi/random_forest.h"

namespace cwi {
namespace {

// Population (maximum-likelihood) mean and variance.
GaussianParams Fit(const std::vector<double> &values) {
  GaussianParams g;
  if (values.empty()) return g;
  double sum = 0.0;
  for (double v : values) sum += v;
  g.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - g.mean) * (v - g.mean);
  g.variance = ss / static_cast<double>(values.size());
  return g;
}

double LogGaussian(double x, const GaussianParams &g) {
  const double d = x - g.mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * g.variance) -
         d * d / (2.0 * g.variance);
}

}  // namespace

NaiveBayesModel TrainNaiveBayes(const FeatureDataset &data) {
  const std::array<std::size_t, 2> class_counts = data.ClassCounts();
  if (class_counts[0] == 0 || class_counts[1] == 0) {
    throw Error(ErrorCode::kSingleClassData,
                "naive Bayes needs both classes; found " +
                    std::to_string(class_counts[0]) + " simple and " +
                    std::to_string(class_counts[1]) + " complex");
  }
  const double n = static_cast<double>(data.size());

  NaiveBayesModel model;
  model.feature_mask = data.mask();
  for (int c = 0; c < 2; ++c) {
    model.priors[c] = (static_cast<double>(class_counts[c]) + 1.0) / (n + 2.0);
  }

  for (FeatureId id : data.mask().Features()) {
    if (IsCategorical(id)) continue;
    std::vector<double> all;
    std::array<std::vector<double>, 2> by_class;
    for (const FeatureVector &v : data.vectors()) {
      const double x = v.Numeric(id);
      all.push_back(x);
      by_class[ToInt(*v.label)].push_back(x);
    }
    const double floor =
        kVarianceFloorScale * (Fit(all).variance + kVarianceFloorOffset);
    model.variance_floors[Index(id)] = floor;
    for (int c = 0; c < 2; ++c) {
      GaussianParams g = Fit(by_class[c]);
      g.variance = std::max(g.variance, floor);
      model.gaussians[Index(id)][c] = g;
    }
  }

  if (data.mask().Contains(FeatureId::kPosTag)) {
    for (const FeatureVector &v : data.vectors()) {
      model.categories.push_back(v.pos_tag);
    }
    std::sort(model.categories.begin(), model.categories.end());
    model.categories.erase(
        std::unique(model.categories.begin(), model.categories.end()),
        model.categories.end());
    const double vocabulary = static_cast<double>(model.categories.size());
    for (int c = 0; c < 2; ++c) {
      std::vector<double> counts(model.categories.size(), 0.0);
      for (const FeatureVector &v : data.vectors()) {
        if (ToInt(*v.label) != c) continue;
        auto it = std::lower_bound(model.categories.begin(),
                                   model.categories.end(), v.pos_tag);
        counts[static_cast<std::size_t>(it - model.categories.begin())] += 1.0;
      }
      const double denom = static_cast<double>(class_counts[c]) + vocabulary;
      for (double &count : counts) count = (count + 1.0) / denom;
      model.category_probs[c] = std::move(counts);
      model.unseen_category_probs[c] = 1.0 / denom;
    }
  }
  return model;
}

std::array<double, 2> NaiveBayesLogJoint(const NaiveBayesModel &model,
                                         const FeatureVector &fv) {
  CheckFeatures(model.feature_mask, fv);
  std::array<double, 2> log_joint = {std::log(model.priors[0]),
                                     std::log(model.priors[1])};
  for (FeatureId id : model.feature_mask.Features()) {
    if (IsCategorical(id)) {
      auto it = std::lower_bound(model.categories.begin(),
                                 model.categories.end(), fv.pos_tag);
      const bool seen = it != model.categories.end() && *it == fv.pos_tag;
      const std::size_t slot =
          static_cast<std::size_t>(it - model.categories.begin());
      for (int c = 0; c < 2; ++c) {
        log_joint[c] += std::log(seen ? model.category_probs[c][slot]
                                      : model.unseen_category_probs[c]);
      }
    } else {
      const double x = fv.Numeric(id);
      for (int c = 0; c < 2; ++c) {
        log_joint[c] += LogGaussian(x, model.gaussians[Index(id)][c]);
      }
    }
  }
  return log_joint;
}

double PredictNaiveBayes(const NaiveBayesModel &model, const FeatureVector &fv) {
  const std::array<double, 2> lj = NaiveBayesLogJoint(model, fv);
  const double top = std::max(lj[0], lj[1]);
  const double e0 = std::exp(lj[0] - top);
  const double e1 = std::exp(lj[1] - top);
  return e1 / (e0 + e1);
}

}  // namespace cwi
