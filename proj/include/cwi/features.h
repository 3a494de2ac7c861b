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

#ifndef CWI_FEATURES_H_
#define CWI_FEATURES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cwi/corpus_io.h"
#include "cwi/lexical_resources.h"

namespace cwi {

// The five features in canonical (serialization) order.
enum class FeatureId : int {
  kLogFrequency = 0,
  kPosTag = 1,
  kSynonymCount = 2,
  kInverseLength = 3,
  kConcreteness = 4,
};

inline constexpr int kNumFeatures = 5;

inline constexpr std::array<FeatureId, kNumFeatures> kAllFeatures = {
    FeatureId::kLogFrequency, FeatureId::kPosTag, FeatureId::kSynonymCount,
    FeatureId::kInverseLength, FeatureId::kConcreteness};

inline int Index(FeatureId id) { return static_cast<int>(id); }

std::string_view FeatureName(FeatureId id);
// Throws kBadFeatureMask for an unknown name.
FeatureId FeatureFromName(std::string_view name);

inline bool IsCategorical(FeatureId id) { return id == FeatureId::kPosTag; }

// Set of active features. Bit i corresponds to the feature with canonical
// index i, so masks print as integers in [1, 31].
class FeatureMask {
 public:
  constexpr FeatureMask() = default;
  constexpr explicit FeatureMask(std::uint32_t bits) : bits_(bits & 0x1f) {}

  static constexpr FeatureMask All() { return FeatureMask(0x1f); }
  static FeatureMask Of(std::initializer_list<FeatureId> ids);

  // Parses "all" or a comma-separated list of feature names.
  static FeatureMask Parse(std::string_view text);

  bool Contains(FeatureId id) const { return bits_ & (1u << Index(id)); }
  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const;

  // Active features in canonical order.
  std::vector<FeatureId> Features() const;

  // Comma-separated canonical names.
  std::string ToString() const;

  bool operator==(const FeatureMask &) const = default;

 private:
  std::uint32_t bits_ = 0;
};

struct FeatureVector {
  double log_frequency = 0.0;
  std::string pos_tag;
  std::int64_t synonym_count = 0;
  double inverse_length = 0.0;
  int concreteness = 0;
  std::optional<Label> label;

  // Value of a numeric feature as a real. Must not be called with kPosTag.
  double Numeric(FeatureId id) const;
  void SetNumeric(FeatureId id, double value);

  // Copy with every feature outside `mask` reset to its default.
  FeatureVector Project(FeatureMask mask) const;

  bool operator==(const FeatureVector &) const = default;
};

// Ordered feature vectors with an active-feature mask. All vectors are
// labeled or none are.
class FeatureDataset {
 public:
  FeatureDataset(std::vector<FeatureVector> vectors, FeatureMask mask);

  const std::vector<FeatureVector> &vectors() const { return vectors_; }
  FeatureMask mask() const { return mask_; }
  bool labeled() const { return labeled_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const FeatureVector &operator[](std::size_t i) const { return vectors_[i]; }

  FeatureDataset WithMask(FeatureMask mask) const;
  // Subset in the given index order; the mask is kept.
  FeatureDataset Select(const std::vector<std::size_t> &indices) const;

  // Number of class-0 and class-1 vectors; throws kUnlabeledData.
  std::array<std::size_t, 2> ClassCounts() const;

 private:
  std::vector<FeatureVector> vectors_;
  FeatureMask mask_;
  bool labeled_ = false;
};

// 1 / (number of UTF-8 code points in `word`). Throws kEmptyWord.
double InverseLength(std::string_view word);

// log10(1 + count).
double LogFrequency(std::uint64_t count);

// Computes the features of the target token. Features outside `mask` are
// left at their defaults (and, for the POS tag, the tagger is not run).
FeatureVector Extract(const Instance &instance, const ResourceBundle &resources,
                      FeatureMask mask = FeatureMask::All());

// One vector per instance, in order, with every feature active.
FeatureDataset BuildFeatureMatrix(const Dataset &dataset,
                                  const ResourceBundle &resources);

// CSV export: canonical header, reals with 6 decimals, integers as
// integers, the tag as bare text, optional trailing label column.
void WriteFeatureMatrix(const FeatureDataset &data, std::ostream &out);

}  // namespace cwi

#endif  // CWI_FEATURES_H_
