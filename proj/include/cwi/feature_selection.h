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

#ifndef CWI_FEATURE_SELECTION_H_
#define CWI_FEATURE_SELECTION_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cwi/evaluation.h"
#include "cwi/features.h"

namespace cwi {

inline constexpr int kMaxDiscretizationBins = 10;

// Equal-frequency cut points for `values`: min(max_bins, distinct values)
// bins, each cut placed at the midpoint between the two distinct values
// whose boundary lies closest to the ideal quantile position (the later
// one on a tie). Value v falls in bin i when cuts[i-1] < v <= cuts[i].
std::vector<double> EqualFrequencyCuts(std::span<const double> values,
                                       int max_bins = kMaxDiscretizationBins);

// H(labels) - H(labels | category). Throws kSingleClassData unless both
// classes occur, kLengthMismatch for unequal columns.
double InformationGain(std::span<const std::string> categories,
                       std::span<const Label> labels);

// Information gain after equal-frequency discretization of `values`.
double InformationGain(std::span<const double> values,
                       std::span<const Label> labels);

double FeatureInformationGain(const FeatureDataset &data, FeatureId feature);

struct RankedFeature {
  FeatureId feature;
  double information_gain;
};

// Active features by descending information gain; ties keep canonical
// order.
std::vector<RankedFeature> RankFeatures(const FeatureDataset &data);

struct SubsetScore {
  FeatureMask subset;
  double accuracy;
};

struct WrapperResult {
  std::vector<SubsetScore> log;  // Every non-empty subset, by bitmask.
  FeatureMask best;
  double best_accuracy = 0.0;
};

// Cross-validates `learner` on every non-empty subset of the active
// features and keeps the most accurate. Ties prefer fewer features, then
// the subset whose canonical feature list sorts first.
WrapperResult WrapperSubsetSelection(const FeatureDataset &data,
                                     const Learner &learner, int k,
                                     std::uint64_t seed,
                                     double threshold = 0.5);

// True if `a` is preferred over `b` at equal accuracy.
bool PreferSubset(FeatureMask a, FeatureMask b);

void WriteRanking(const std::vector<RankedFeature> &ranking, std::ostream &out);
// One `subset_bitmask<TAB>accuracy` line per evaluated subset.
void WriteWrapperLog(const WrapperResult &result, std::ostream &out);

}  // namespace cwi

#endif  // CWI_FEATURE_SELECTION_H_
