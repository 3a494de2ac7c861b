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

#include "cwi/lexical_resources.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>

#include "cwi/corpus_io.h"
#include "cwi/error.h"

namespace cwi {
namespace {

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return in;
}

std::string Where(const std::string &path, std::size_t line_number) {
  return path + ":" + std::to_string(line_number);
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  return text;
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frequency table.

void FrequencyStore::Add(std::string_view word, std::uint64_t count) {
  std::uint64_t &total = counts_[ToLower(word)];
  if (total > std::numeric_limits<std::uint64_t>::max() - count) {
    throw Error(ErrorCode::kMalformedCount,
                "count for '" + std::string(word) + "' overflows");
  }
  total += count;
}

std::uint64_t FrequencyStore::Frequency(std::string_view word) const {
  auto it = counts_.find(ToLower(word));
  return it == counts_.end() ? 0 : it->second;
}

FrequencyStore LoadFrequencyTable(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  FrequencyStore store;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    auto fields = SplitFields(StripCarriageReturn(line), '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  Where(path, line_number) + ": expected word<TAB>count");
    }
    std::string_view text = fields[1];
    std::uint64_t count = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, count);
    if (text.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kMalformedCount,
                  Where(path, line_number) + ": count '" + std::string(text) +
                      "' is not a non-negative integer");
    }
    try {
      store.Add(fields[0], count);
    } catch (const Error &e) {
      Rethrow(e, Where(path, line_number));
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure on " + path);
  return store;
}

// ---------------------------------------------------------------------------
// MRC concreteness.

bool ConcretenessStore::Add(std::string_view word, int score) {
  if (score < kMinScore || score > kMaxScore) return false;
  auto [it, inserted] = scores_.emplace(ToLower(word), score);
  if (!inserted) it->second = std::max(it->second, score);
  return true;
}

int ConcretenessStore::Concreteness(std::string_view word) const {
  auto it = scores_.find(ToLower(word));
  return it == scores_.end() ? 0 : it->second;
}

ConcretenessStore LoadMrc(const std::string &path) {
  constexpr std::size_t kCncBegin = MrcLayout::kCncFirstColumn - 1;
  constexpr std::size_t kCncWidth =
      MrcLayout::kCncLastColumn - MrcLayout::kCncFirstColumn + 1;
  constexpr std::size_t kWordBegin = MrcLayout::kWordFirstColumn - 1;

  std::ifstream in = OpenOrThrow(path);
  ConcretenessStore store;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = StripCarriageReturn(raw);
    if (line.empty()) continue;
    if (line.size() < MrcLayout::kCncLastColumn) {
      throw Error(ErrorCode::kShortLine,
                  Where(path, line_number) + ": record has " +
                      std::to_string(line.size()) + " columns, CNC ends at " +
                      std::to_string(MrcLayout::kCncLastColumn));
    }
    std::string_view cnc_field = Trim(line.substr(kCncBegin, kCncWidth));
    int cnc = 0;
    const char *end = cnc_field.data() + cnc_field.size();
    auto [ptr, ec] = std::from_chars(cnc_field.data(), end, cnc);
    if (cnc_field.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kMalformedRecord,
                  Where(path, line_number) + ": CNC field '" +
                      std::string(cnc_field) + "' is not numeric");
    }
    if (cnc == 0 || line.size() <= kWordBegin) continue;

    // The word runs up to the first '|' (phonetic fields follow it).
    std::string_view word = line.substr(kWordBegin);
    word = word.substr(0, word.find('|'));
    word = Trim(word);
    if (word.empty()) continue;
    store.Add(word, cnc);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure on " + path);
  return store;
}

// ---------------------------------------------------------------------------

ResourceBundle LoadResources(const ResourcePaths &paths) {
  ResourceBundle bundle;
  bundle.frequency = LoadFrequencyTable(paths.frequency_table);
  bundle.synonyms = LoadWordNet(paths.wordnet_dir);
  bundle.concreteness = LoadMrc(paths.mrc_file);
  bundle.tagger = std::make_shared<const LexiconTagger>(
      LoadTaggerLexicon(paths.tagger_lexicon));
  return bundle;
}

}  // namespace cwi
