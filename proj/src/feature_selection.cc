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

#include "cwi/feature_selection.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "cwi/decision_tree.h"
#include "cwi/error.h"

namespace cwi {
namespace {

std::array<std::size_t, 2> CheckLabels(std::size_t values,
                                       std::span<const Label> labels) {
  if (values != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(values) + " values for " +
                    std::to_string(labels.size()) + " labels");
  }
  std::array<std::size_t, 2> counts = {0, 0};
  for (Label y : labels) ++counts[ToInt(y)];
  if (counts[0] == 0 || counts[1] == 0) {
    throw Error(ErrorCode::kSingleClassData,
                "information gain needs both classes");
  }
  return counts;
}

template <typename Key>
double GainFromGroups(const std::map<Key, std::array<std::size_t, 2>> &groups,
                      const std::array<std::size_t, 2> &totals) {
  const double n = static_cast<double>(totals[0] + totals[1]);
  double conditional = 0.0;
  for (const auto &[key, c] : groups) {
    conditional += static_cast<double>(c[0] + c[1]) / n * Entropy(c[0], c[1]);
  }
  return std::max(0.0, Entropy(totals[0], totals[1]) - conditional);
}

}  // namespace

std::vector<double> EqualFrequencyCuts(std::span<const double> values,
                                       int max_bins) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  // Boundaries between consecutive distinct values: (rows at or below, cut).
  std::vector<std::pair<std::size_t, double>> boundaries;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] != sorted[i + 1]) {
      double mid = sorted[i] + (sorted[i + 1] - sorted[i]) / 2.0;
      if (!(mid < sorted[i + 1])) mid = sorted[i];
      boundaries.emplace_back(i + 1, mid);
    }
  }
  const std::size_t distinct = boundaries.size() + (sorted.empty() ? 0 : 1);
  const std::size_t bins =
      std::min(static_cast<std::size_t>(std::max(max_bins, 1)), distinct);
  std::vector<double> cuts;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t b = 1; b < bins; ++b) {
    const double target = static_cast<double>(b) * n / static_cast<double>(bins);
    std::size_t best = 0;
    double best_distance = std::abs(static_cast<double>(boundaries[0].first) - target);
    for (std::size_t j = 1; j < boundaries.size(); ++j) {
      const double d = std::abs(static_cast<double>(boundaries[j].first) - target);
      // Ties go to the later boundary so that a quantile halfway between
      // two boundaries does not reuse the earlier one.
      if (d <= best_distance) {
        best = j;
        best_distance = d;
      }
    }
    cuts.push_back(boundaries[best].second);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

double InformationGain(std::span<const std::string> categories,
                       std::span<const Label> labels) {
  const auto totals = CheckLabels(categories.size(), labels);
  std::map<std::string, std::array<std::size_t, 2>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ++groups[categories[i]][ToInt(labels[i])];
  }
  return GainFromGroups(groups, totals);
}

double InformationGain(std::span<const double> values,
                       std::span<const Label> labels) {
  const auto totals = CheckLabels(values.size(), labels);
  const std::vector<double> cuts = EqualFrequencyCuts(values);
  std::map<std::size_t, std::array<std::size_t, 2>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t bin = static_cast<std::size_t>(
        std::lower_bound(cuts.begin(), cuts.end(), values[i]) - cuts.begin());
    ++groups[bin][ToInt(labels[i])];
  }
  return GainFromGroups(groups, totals);
}

double FeatureInformationGain(const FeatureDataset &data, FeatureId feature) {
  if (!data.labeled()) {
    throw Error(ErrorCode::kUnlabeledData, "information gain needs labels");
  }
  std::vector<Label> labels;
  labels.reserve(data.size());
  for (const FeatureVector &v : data.vectors()) labels.push_back(*v.label);
  if (IsCategorical(feature)) {
    std::vector<std::string> column;
    for (const FeatureVector &v : data.vectors()) column.push_back(v.pos_tag);
    return InformationGain(std::span<const std::string>(column), labels);
  }
  std::vector<double> column;
  for (const FeatureVector &v : data.vectors()) column.push_back(v.Numeric(feature));
  return InformationGain(std::span<const double>(column), labels);
}

std::vector<RankedFeature> RankFeatures(const FeatureDataset &data) {
  std::vector<RankedFeature> ranking;
  for (FeatureId id : data.mask().Features()) {
    ranking.push_back({id, FeatureInformationGain(data, id)});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedFeature &a, const RankedFeature &b) {
                     return a.information_gain > b.information_gain;
                   });
  return ranking;
}

bool PreferSubset(FeatureMask a, FeatureMask b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.Features() < b.Features();
}

WrapperResult WrapperSubsetSelection(const FeatureDataset &data,
                                     const Learner &learner, int k,
                                     std::uint64_t seed, double threshold) {
  const std::uint32_t active = data.mask().bits();
  WrapperResult result;
  bool have_best = false;
  for (std::uint32_t bits = 1; bits <= 0x1f; ++bits) {
    if ((bits & ~active) != 0) continue;
    const FeatureMask subset(bits);
    CrossValidationResult cv;
    try {
      cv = CrossValidate(learner, data.WithMask(subset), k, seed, threshold);
    } catch (const Error &e) {
      Rethrow(e, "subset " + std::to_string(bits));
    }
    const double accuracy = cv.metrics.accuracy;
    result.log.push_back({subset, accuracy});
    if (!have_best || accuracy > result.best_accuracy ||
        (accuracy == result.best_accuracy && PreferSubset(subset, result.best))) {
      result.best = subset;
      result.best_accuracy = accuracy;
      have_best = true;
    }
  }
  return result;
}

void WriteRanking(const std::vector<RankedFeature> &ranking, std::ostream &out) {
  out << "feature\tinformation_gain\n";
  char value[32];
  for (const RankedFeature &r : ranking) {
    std::snprintf(value, sizeof(value), "%.3f", r.information_gain);
    out << FeatureName(r.feature) << '\t' << value << '\n';
  }
}

void WriteWrapperLog(const WrapperResult &result, std::ostream &out) {
  char value[32];
  for (const SubsetScore &s : result.log) {
    std::snprintf(value, sizeof(value), "%.6f", s.accuracy);
    out << s.subset.bits() << '\t' << value << '\n';
  }
}

}  // namespace cwi
