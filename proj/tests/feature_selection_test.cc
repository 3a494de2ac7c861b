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

#include <sstream>

#include "doctest.h"

#include "cwi/decision_tree.h"
#include "cwi/error.h"
#include "cwi/random.h"
#include "testing/fixtures.h"

namespace cwi {
namespace {

using testing::CaughtCode;

constexpr Label S = Label::kSimple;
constexpr Label C = Label::kComplex;

// log_frequency takes one value per class; every other feature is noise.
FeatureDataset OneInformativeFeature(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::string> tags = {"NN", "VB", "JJ"};
  std::vector<FeatureVector> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    const int label = i % 3 == 0 ? 1 : 0;
    FeatureVector v;
    v.log_frequency = label ? 1.0 : 4.0;
    v.pos_tag = tags[rng.Below(tags.size())];
    v.synonym_count = static_cast<std::int64_t>(rng.Below(10));
    v.inverse_length = 1.0 / static_cast<double>(1 + rng.Below(12));
    v.concreteness = 100 + static_cast<int>(rng.Below(600));
    v.label = label ? C : S;
    vectors.push_back(v);
  }
  return FeatureDataset(std::move(vectors), FeatureMask::All());
}

TEST_CASE("gain of a label-identical feature equals the label entropy") {
  const std::vector<Label> labels = {S, S, C, C, C, S, C};
  std::vector<std::string> categories;
  std::vector<double> values;
  for (Label y : labels) {
    categories.push_back(y == C ? "VB" : "NN");
    values.push_back(y == C ? 2.0 : 1.0);
  }
  const double h = Entropy(3, 4);
  CHECK(InformationGain(std::span<const std::string>(categories), labels) ==
        doctest::Approx(h));
  CHECK(InformationGain(std::span<const double>(values), labels) ==
        doctest::Approx(h));
}

TEST_CASE("constant feature has no gain") {
  const std::vector<Label> labels = {S, C, C, S};
  const std::vector<double> values(4, 3.0);
  CHECK(InformationGain(std::span<const double>(values), labels) == 0.0);
}

TEST_CASE("two-category example") {
  const std::vector<std::string> categories = {"a", "a", "b", "b"};
  const std::vector<Label> labels = {S, S, C, C};
  CHECK(InformationGain(std::span<const std::string>(categories), labels) ==
        doctest::Approx(1.0));
  const std::vector<Label> mixed = {S, C, S, C};
  CHECK(InformationGain(std::span<const std::string>(categories), mixed) ==
        doctest::Approx(0.0));
}

TEST_CASE("gain is bounded by the label entropy") {
  const FeatureDataset data = testing::MixedDataset(300, 8);
  const auto counts = data.ClassCounts();
  const double h = Entropy(counts[0], counts[1]);
  for (FeatureId id : kAllFeatures) {
    const double ig = FeatureInformationGain(data, id);
    CHECK(ig >= 0.0);
    CHECK(ig <= h + 1e-12);
  }
}

TEST_CASE("information gain errors") {
  const std::vector<double> values = {1, 2};
  const std::vector<Label> same = {C, C};
  const std::vector<Label> one = {C};
  CHECK(CaughtCode([&] {
          InformationGain(std::span<const double>(values), same);
        }) == ErrorCode::kSingleClassData);
  CHECK(CaughtCode([&] {
          InformationGain(std::span<const double>(values), one);
        }) == ErrorCode::kLengthMismatch);
}

TEST_CASE("equal-frequency cuts") {
  const std::vector<double> ten = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(EqualFrequencyCuts(ten, 2) == std::vector<double>{5.5});
  CHECK(EqualFrequencyCuts(ten).size() == 9);
  const std::vector<double> three = {1, 1, 1, 2, 2, 3};
  CHECK(EqualFrequencyCuts(three) == std::vector<double>{1.5, 2.5});
  const std::vector<double> constant = {4, 4, 4};
  CHECK(EqualFrequencyCuts(constant).empty());
}

TEST_CASE("ranking puts the informative feature first") {
  const FeatureDataset data = OneInformativeFeature(90, 4);
  const auto ranking = RankFeatures(data);
  REQUIRE(ranking.size() == 5);
  CHECK(ranking[0].feature == FeatureId::kLogFrequency);
  CHECK(ranking[0].information_gain == doctest::Approx(Entropy(60, 30)));
  for (std::size_t i = 1; i < ranking.size(); ++i) {
    CHECK(ranking[i - 1].information_gain >= ranking[i].information_gain);
  }
  std::ostringstream out;
  WriteRanking(ranking, out);
  CHECK(out.str().rfind("feature\tinformation_gain\nlog_frequency\t0.918\n", 0) ==
        0);
}

TEST_CASE("wrapper evaluates every subset and keeps the singleton") {
  const FeatureDataset data = OneInformativeFeature(60, 5);
  const auto learner = MakeLearner(LearnerKind::kTree, TrainConfig());
  const WrapperResult result = WrapperSubsetSelection(data, *learner, 5, 42);
  REQUIRE(result.log.size() == 31);
  for (std::size_t i = 0; i < 31; ++i) CHECK(result.log[i].subset.bits() == i + 1);
  CHECK(result.best == FeatureMask::Of({FeatureId::kLogFrequency}));
  CHECK(result.best_accuracy == 1.0);
  std::ostringstream out;
  WriteWrapperLog(result, out);
  CHECK(out.str().rfind("1\t1.000000\n", 0) == 0);
}

TEST_CASE("wrapper respects the active mask") {
  const FeatureDataset data =
      OneInformativeFeature(60, 5).WithMask(FeatureMask(0b10101));
  const auto learner = MakeLearner(LearnerKind::kNaiveBayes, TrainConfig());
  CHECK(WrapperSubsetSelection(data, *learner, 3, 1).log.size() == 7);
}

TEST_CASE("subset preference") {
  const FeatureMask a = FeatureMask::Of({FeatureId::kConcreteness});
  const FeatureMask b = FeatureMask::Of({FeatureId::kLogFrequency,
                                         FeatureId::kPosTag});
  CHECK(PreferSubset(a, b));
  CHECK_FALSE(PreferSubset(b, a));
  const FeatureMask c = FeatureMask::Of({FeatureId::kLogFrequency});
  CHECK(PreferSubset(c, a));
  CHECK_FALSE(PreferSubset(a, a));
}

}  // namespace
}  // namespace cwi
