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

#ifndef CWI_TESTS_TESTING_FIXTURES_H_
#define CWI_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cwi/error.h"
#include "cwi/features.h"
#include "cwi/lexical_resources.h"

namespace cwi::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::string File(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

// Code of the cwi::Error thrown by `fn`, or nullopt if it returns.
template <typename Fn>
std::optional<ErrorCode> CaughtCode(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

void WriteFile(const std::string &path, const std::string &content);
std::string ReadFile(const std::string &path);

// One MRC2 record: zero-filled numeric fields, CNC right-aligned in
// columns 29-31, the uppercase word from column 52, then '|'-separated
// phonetic fields.
std::string MrcRecord(const std::string &word, int cnc);

struct SynsetFixture {
  char pos;  // 'n', 'v', 'a' or 'r'
  std::uint32_t offset;
  std::vector<std::string> words;
};

// Writes index.* and data.* for all four parts of speech (empty files for
// unused ones, license header lines included) into `dir`.
void WriteWordNet(const std::string &dir,
                  const std::vector<SynsetFixture> &synsets);

// Resource files plus a labeled instance file built from a synthetic
// vocabulary. Complex words are rarer, have fewer synonyms, are longer and
// more often abstract; labels are drawn with noise.
struct SyntheticCorpus {
  ResourcePaths resources;
  std::string data_path;
  std::string unlabeled_path;
  std::size_t instances = 0;
};

SyntheticCorpus WriteSyntheticCorpus(const std::string &dir,
                                     std::size_t instances, std::uint64_t seed);

// 2-D linearly separable vectors on log_frequency and inverse_length:
// class 1 iff x + y > 1, with a margin around the boundary.
FeatureDataset SeparableDataset(std::size_t n, std::uint64_t seed,
                                double margin = 0.1);

// Random vectors over all five features with noisy labels tied to
// log_frequency and synonym_count.
FeatureDataset MixedDataset(std::size_t n, std::uint64_t seed);

}  // namespace cwi::testing

#endif  // CWI_TESTS_TESTING_FIXTURES_H_
