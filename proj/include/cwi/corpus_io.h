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

#ifndef CWI_CORPUS_IO_H_
#define CWI_CORPUS_IO_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwi {

enum class Label : int { kSimple = 0, kComplex = 1 };

inline int ToInt(Label label) { return static_cast<int>(label); }

// One task item: a pre-tokenized sentence and the target token inside it.
// `offset` is a zero-based index into `tokens`.
struct Instance {
  std::vector<std::string> tokens;
  std::string target_word;
  std::size_t offset = 0;
  std::optional<Label> label;

  bool operator==(const Instance &other) const = default;
};

// An ordered, immutable collection of instances that are either all
// labeled or all unlabeled.
class Dataset {
 public:
  // Throws kEmptyDataset if `instances` is empty and kBadFieldCount if the
  // labeling of any instance disagrees with `labeled`.
  Dataset(std::vector<Instance> instances, bool labeled);

  const std::vector<Instance> &instances() const { return instances_; }
  bool labeled() const { return labeled_; }
  std::size_t size() const { return instances_.size(); }
  const Instance &operator[](std::size_t i) const { return instances_[i]; }

 private:
  std::vector<Instance> instances_;
  bool labeled_;
};

// Parses `sentence<TAB>word<TAB>offset[<TAB>label]`. A trailing carriage
// return is ignored. The sentence is split on whitespace; tokens[offset]
// must equal the target word exactly.
Instance ParseInstance(std::string_view line, bool labeled);

// Inverse of ParseInstance: tokens are joined with single spaces.
std::string FormatInstance(const Instance &instance);

// Reads one instance per non-blank line. Errors carry the 1-based line
// number of the offending line.
Dataset LoadDataset(const std::string &path, bool labeled);
Dataset ReadDataset(std::istream &in, bool labeled,
                    const std::string &source_name);

// Prediction output row: the original input line followed by the predicted
// label and the probability of the complex class (6 decimals).
std::string FormatPredictionLine(std::string_view input_line, Label predicted,
                                 double probability_complex);

// Splits on runs of ASCII whitespace.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on every occurrence of `delimiter`; empty fields are kept.
std::vector<std::string_view> SplitFields(std::string_view text,
                                          char delimiter);

// Strips one trailing '\r', if present.
std::string_view StripCarriageReturn(std::string_view line);

// True for empty lines or lines containing only whitespace.
bool IsBlank(std::string_view line);

}  // namespace cwi

#endif  // CWI_CORPUS_IO_H_
