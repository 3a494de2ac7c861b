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

#ifndef CWI_LEXICAL_RESOURCES_H_
#define CWI_LEXICAL_RESOURCES_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cwi {

// ASCII case folding; bytes outside A-Z (including UTF-8 continuation
// bytes) pass through unchanged.
std::string ToLower(std::string_view text);

// Unigram occurrence counts keyed by lowercase word.
class FrequencyStore {
 public:
  // Case-folds `word` and adds `count` to its running total. Throws
  // kMalformedCount on overflow.
  void Add(std::string_view word, std::uint64_t count);

  // Count for the case-folded word, 0 when absent.
  std::uint64_t Frequency(std::string_view word) const;

  std::size_t size() const { return counts_.size(); }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

// Reads `word<TAB>count` lines. Blank lines are skipped.
FrequencyStore LoadFrequencyTable(const std::string &path);

// WordNet synonym sets. Synset ids combine the part-of-speech letter of
// the data file with the byte offset, e.g. "n:02084071", since offsets are
// only unique within one file.
class SynonymStore {
 public:
  using SynsetId = std::string;

  // Registers a synset with its member lemmas (normalized on insert).
  // Re-adding an id merges the member lists.
  void AddSynset(const SynsetId &id, std::span<const std::string> lemmas);

  // Records that `lemma` belongs to synset `id`. The lemma is also added to
  // the synset's members so the index never points at a synset that does
  // not list the lemma.
  void AddLemma(std::string_view lemma, const SynsetId &id);

  bool HasSynset(const SynsetId &id) const;

  // Synsets containing the normalized word; empty if none.
  std::vector<SynsetId> SynsetsOf(std::string_view word) const;

  // Sorted member lemmas of a synset; empty for an unknown id.
  std::vector<std::string> Members(const SynsetId &id) const;

  // Number of distinct lemmas sharing at least one synset with `word`,
  // not counting `word` itself.
  std::size_t SynonymCount(std::string_view word) const;

  std::size_t lemma_count() const { return lemma_index_.size(); }
  std::size_t synset_count() const { return members_.size(); }

  // Lowercases and replaces underscores with spaces.
  static std::string Normalize(std::string_view lemma);

 private:
  std::unordered_map<std::string, std::vector<SynsetId>> lemma_index_;
  std::unordered_map<SynsetId, std::vector<std::string>> members_;
};

// Loads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} from a
// WordNet 3.x dict directory.
SynonymStore LoadWordNet(const std::string &directory);

// MRC concreteness ratings in [100, 700], keyed by lowercase word.
class ConcretenessStore {
 public:
  static constexpr int kMinScore = 100;
  static constexpr int kMaxScore = 700;

  // Stores the score if it lies in [kMinScore, kMaxScore]; returns whether
  // it did. Duplicate words keep the larger score.
  bool Add(std::string_view word, int score);

  // Stored score, or 0 for words without a rating.
  int Concreteness(std::string_view word) const;

  std::size_t size() const { return scores_.size(); }

 private:
  std::unordered_map<std::string, int> scores_;
};

// Fixed-width MRC2 record layout (1-based inclusive columns from the
// MRC2.DCT field table).
struct MrcLayout {
  static constexpr std::size_t kCncFirstColumn = 29;
  static constexpr std::size_t kCncLastColumn = 31;
  static constexpr std::size_t kWordFirstColumn = 52;
};

ConcretenessStore LoadMrc(const std::string &path);

// Part-of-speech tagging contract: one Penn Treebank tag (or kUnknownTag)
// per input token, deterministically.
class PosTagger {
 public:
  static constexpr std::string_view kUnknownTag = "UNK";

  virtual ~PosTagger() = default;
  virtual std::vector<std::string> Tag(
      std::span<const std::string> tokens) const = 0;
};

bool IsPennTag(std::string_view tag);

// Checks the contract around `tagger.Tag`: throws kEmptySentence on empty
// input and kBadTag if the tagger breaks the shape or inventory rules.
std::vector<std::string> TagSentence(const PosTagger &tagger,
                                     std::span<const std::string> tokens);

// Most-frequent-tag lexicon with suffix fallbacks (-ly RB, -ing VBG,
// -ed VBD), then UNK. Lookup tries the surface form first, then its
// lowercase form.
class LexiconTagger : public PosTagger {
 public:
  LexiconTagger() = default;
  explicit LexiconTagger(std::unordered_map<std::string, std::string> lexicon);

  std::vector<std::string> Tag(
      std::span<const std::string> tokens) const override;

  std::string TagWord(const std::string &token) const;

  std::size_t size() const { return lexicon_.size(); }

 private:
  std::unordered_map<std::string, std::string> lexicon_;
};

// Reads `word<TAB>tag` lines; the first entry for a word wins. Tags outside
// the Penn inventory raise kBadTag.
LexiconTagger LoadTaggerLexicon(const std::string &path);

struct ResourceBundle {
  FrequencyStore frequency;
  SynonymStore synonyms;
  ConcretenessStore concreteness;
  std::shared_ptr<const PosTagger> tagger;
};

struct ResourcePaths {
  std::string frequency_table;
  std::string wordnet_dir;
  std::string mrc_file;
  std::string tagger_lexicon;
};

ResourceBundle LoadResources(const ResourcePaths &paths);

}  // namespace cwi

#endif  // CWI_LEXICAL_RESOURCES_H_
