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

#include <algorithm>
#include <array>
#include <fstream>

#include "cwi/corpus_io.h"
#include "cwi/error.h"
#include "cwi/lexical_resources.h"

namespace cwi {
namespace {

// Penn Treebank tags, including the bracket and quote tokens emitted by
// common taggers.
constexpr std::array<std::string_view, 49> kPennTags = {
    "CC",  "CD",    "DT",    "EX",    "FW",    "IN",    "JJ",   "JJR",
    "JJS", "LS",    "MD",    "NN",    "NNS",   "NNP",   "NNPS", "PDT",
    "POS", "PRP",   "PRP$",  "RB",    "RBR",   "RBS",   "RP",   "SYM",
    "TO",  "UH",    "VB",    "VBD",   "VBG",   "VBN",   "VBP",  "VBZ",
    "WDT", "WP",    "WP$",   "WRB",   "$",     "#",     "``",   "''",
    ",",   ".",     ":",     "-LRB-", "-RRB-", "-LCB-", "-RCB-", "-LSB-",
    "-RSB-",
};

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() > suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

}  // namespace

bool IsPennTag(std::string_view tag) {
  return std::find(kPennTags.begin(), kPennTags.end(), tag) != kPennTags.end();
}

std::vector<std::string> TagSentence(const PosTagger &tagger,
                                     std::span<const std::string> tokens) {
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptySentence, "cannot tag an empty sentence");
  }
  std::vector<std::string> tags = tagger.Tag(tokens);
  if (tags.size() != tokens.size()) {
    throw Error(ErrorCode::kBadTag,
                "tagger returned " + std::to_string(tags.size()) +
                    " tags for " + std::to_string(tokens.size()) + " tokens");
  }
  for (const std::string &tag : tags) {
    if (tag != PosTagger::kUnknownTag && !IsPennTag(tag)) {
      throw Error(ErrorCode::kBadTag, "tagger emitted '" + tag + "'");
    }
  }
  return tags;
}

LexiconTagger::LexiconTagger(
    std::unordered_map<std::string, std::string> lexicon)
    : lexicon_(std::move(lexicon)) {
  for (const auto &[word, tag] : lexicon_) {
    if (!IsPennTag(tag)) {
      throw Error(ErrorCode::kBadTag,
                  "lexicon tag '" + tag + "' for '" + word + "'");
    }
  }
}

std::string LexiconTagger::TagWord(const std::string &token) const {
  auto it = lexicon_.find(token);
  if (it != lexicon_.end()) return it->second;
  std::string lower = ToLower(token);
  it = lexicon_.find(lower);
  if (it != lexicon_.end()) return it->second;
  if (EndsWith(lower, "ly")) return "RB";
  if (EndsWith(lower, "ing")) return "VBG";
  if (EndsWith(lower, "ed")) return "VBD";
  return std::string(kUnknownTag);
}

std::vector<std::string> LexiconTagger::Tag(
    std::span<const std::string> tokens) const {
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const std::string &token : tokens) tags.push_back(TagWord(token));
  return tags;
}

LexiconTagger LoadTaggerLexicon(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::unordered_map<std::string, std::string> lexicon;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    auto fields = SplitFields(StripCarriageReturn(line), '\t');
    const std::string where = path + ":" + std::to_string(line_number);
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kMalformedLine, where + ": expected word<TAB>tag");
    }
    if (!IsPennTag(fields[1])) {
      throw Error(ErrorCode::kBadTag,
                  where + ": '" + std::string(fields[1]) +
                      "' is not a Penn Treebank tag");
    }
    lexicon.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure on " + path);
  return LexiconTagger(std::move(lexicon));
}

}  // namespace cwi
