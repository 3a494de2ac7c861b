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

#include "cwi/features.h"

#include <bit>
#include <cmath>
#include <cstdio>

#include "cwi/error.h"

namespace cwi {

std::string_view FeatureName(FeatureId id) {
  switch (id) {
    case FeatureId::kLogFrequency: return "log_frequency";
    case FeatureId::kPosTag: return "pos_tag";
    case FeatureId::kSynonymCount: return "synonym_count";
    case FeatureId::kInverseLength: return "inverse_length";
    case FeatureId::kConcreteness: return "concreteness";
  }
  return "?";
}

FeatureId FeatureFromName(std::string_view name) {
  for (FeatureId id : kAllFeatures) {
    if (FeatureName(id) == name) return id;
  }
  throw Error(ErrorCode::kBadFeatureMask,
              "unknown feature '" + std::string(name) + "'");
}

FeatureMask FeatureMask::Of(std::initializer_list<FeatureId> ids) {
  std::uint32_t bits = 0;
  for (FeatureId id : ids) bits |= 1u << Index(id);
  return FeatureMask(bits);
}

FeatureMask FeatureMask::Parse(std::string_view text) {
  if (text == "all") return All();
  std::uint32_t bits = 0;
  for (std::string_view name : SplitFields(text, ',')) {
    bits |= 1u << Index(FeatureFromName(name));
  }
  return FeatureMask(bits);
}

int FeatureMask::count() const { return std::popcount(bits_); }

std::vector<FeatureId> FeatureMask::Features() const {
  std::vector<FeatureId> ids;
  for (FeatureId id : kAllFeatures) {
    if (Contains(id)) ids.push_back(id);
  }
  return ids;
}

std::string FeatureMask::ToString() const {
  std::string out;
  for (FeatureId id : Features()) {
    if (!out.empty()) out += ',';
    out += FeatureName(id);
  }
  return out;
}

double FeatureVector::Numeric(FeatureId id) const {
  switch (id) {
    case FeatureId::kLogFrequency: return log_frequency;
    case FeatureId::kSynonymCount: return static_cast<double>(synonym_count);
    case FeatureId::kInverseLength: return inverse_length;
    case FeatureId::kConcreteness: return concreteness;
    case FeatureId::kPosTag: break;
  }
  throw Error(ErrorCode::kMissingFeature, "pos_tag is not numeric");
}

void FeatureVector::SetNumeric(FeatureId id, double value) {
  switch (id) {
    case FeatureId::kLogFrequency: log_frequency = value; return;
    case FeatureId::kSynonymCount:
      synonym_count = static_cast<std::int64_t>(value);
      return;
    case FeatureId::kInverseLength: inverse_length = value; return;
    case FeatureId::kConcreteness: concreteness = static_cast<int>(value); return;
    case FeatureId::kPosTag: break;
  }
  throw Error(ErrorCode::kMissingFeature, "pos_tag is not numeric");
}

FeatureVector FeatureVector::Project(FeatureMask mask) const {
  FeatureVector out;
  out.label = label;
  if (mask.Contains(FeatureId::kLogFrequency)) out.log_frequency = log_frequency;
  if (mask.Contains(FeatureId::kPosTag)) out.pos_tag = pos_tag;
  if (mask.Contains(FeatureId::kSynonymCount)) out.synonym_count = synonym_count;
  if (mask.Contains(FeatureId::kInverseLength)) {
    out.inverse_length = inverse_length;
  }
  if (mask.Contains(FeatureId::kConcreteness)) out.concreteness = concreteness;
  return out;
}

FeatureDataset::FeatureDataset(std::vector<FeatureVector> vectors,
                               FeatureMask mask)
    : vectors_(std::move(vectors)), mask_(mask) {
  if (mask_.empty()) {
    throw Error(ErrorCode::kBadFeatureMask, "feature mask is empty");
  }
  labeled_ = !vectors_.empty() && vectors_.front().label.has_value();
  for (const FeatureVector &v : vectors_) {
    if (v.label.has_value() != labeled_) {
      throw Error(ErrorCode::kUnlabeledData,
                  "dataset mixes labeled and unlabeled vectors");
    }
  }
}

FeatureDataset FeatureDataset::WithMask(FeatureMask mask) const {
  return FeatureDataset(vectors_, mask);
}

FeatureDataset FeatureDataset::Select(
    const std::vector<std::size_t> &indices) const {
  std::vector<FeatureVector> subset;
  subset.reserve(indices.size());
  for (std::size_t i : indices) subset.push_back(vectors_.at(i));
  return FeatureDataset(std::move(subset), mask_);
}

std::array<std::size_t, 2> FeatureDataset::ClassCounts() const {
  if (!labeled_) throw Error(ErrorCode::kUnlabeledData, "dataset is unlabeled");
  std::array<std::size_t, 2> counts = {0, 0};
  for (const FeatureVector &v : vectors_) ++counts[ToInt(*v.label)];
  return counts;
}

double InverseLength(std::string_view word) {
  std::size_t code_points = 0;
  for (unsigned char c : word) {
    if ((c & 0xc0) != 0x80) ++code_points;
  }
  if (code_points == 0) {
    throw Error(ErrorCode::kEmptyWord, "word has no characters");
  }
  return 1.0 / static_cast<double>(code_points);
}

double LogFrequency(std::uint64_t count) {
  return std::log10(1.0 + static_cast<double>(count));
}

FeatureVector Extract(const Instance &instance, const ResourceBundle &resources,
                      FeatureMask mask) {
  const std::string &word = instance.target_word;
  FeatureVector fv;
  fv.label = instance.label;
  if (mask.Contains(FeatureId::kLogFrequency)) {
    fv.log_frequency = LogFrequency(resources.frequency.Frequency(word));
  }
  if (mask.Contains(FeatureId::kPosTag)) {
    std::vector<std::string> tags =
        TagSentence(*resources.tagger, instance.tokens);
    fv.pos_tag = tags.at(instance.offset);
  }
  if (mask.Contains(FeatureId::kSynonymCount)) {
    fv.synonym_count =
        static_cast<std::int64_t>(resources.synonyms.SynonymCount(word));
  }
  if (mask.Contains(FeatureId::kInverseLength)) {
    fv.inverse_length = InverseLength(word);
  }
  if (mask.Contains(FeatureId::kConcreteness)) {
    fv.concreteness = resources.concreteness.Concreteness(word);
  }
  return fv;
}

FeatureDataset BuildFeatureMatrix(const Dataset &dataset,
                                  const ResourceBundle &resources) {
  std::vector<FeatureVector> vectors;
  vectors.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    try {
      vectors.push_back(Extract(dataset[i], resources));
    } catch (const Error &e) {
      Rethrow(e, "instance " + std::to_string(i));
    }
  }
  return FeatureDataset(std::move(vectors), FeatureMask::All());
}

void WriteFeatureMatrix(const FeatureDataset &data, std::ostream &out) {
  out << "log_frequency,pos_tag,synonym_count,inverse_length,concreteness";
  if (data.labeled()) out << ",label";
  out << '\n';
  char buffer[128];
  for (const FeatureVector &v : data.vectors()) {
    std::snprintf(buffer, sizeof(buffer), "%.6f,", v.log_frequency);
    out << buffer << v.pos_tag << ',' << v.synonym_count << ',';
    std::snprintf(buffer, sizeof(buffer), "%.6f,%d", v.inverse_length,
                  v.concreteness);
    out << buffer;
    if (v.label) out << ',' << ToInt(*v.label);
    out << '\n';
  }
}

}  // namespace cwi
