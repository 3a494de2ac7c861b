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
#include <charconv>
#include <filesystem>
#include <fstream>

#include "cwi/corpus_io.h"
#include "cwi/error.h"
#include "cwi/lexical_resources.h"

namespace cwi {
namespace {

struct PosFiles {
  const char *suffix;
  char letter;
};

constexpr std::array<PosFiles, 4> kPosFiles = {{
    {"noun", 'n'},
    {"verb", 'v'},
    {"adj", 'a'},
    {"adv", 'r'},
}};

bool IsLicenseLine(const std::string &line) {
  return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

bool ParseUnsigned(std::string_view text, int base, std::size_t *value) {
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *value, base);
  return !text.empty() && ec == std::errc() && ptr == end;
}

SynonymStore::SynsetId MakeId(char pos_letter, std::string_view offset) {
  std::string id(1, pos_letter);
  id += ':';
  id += offset;
  return id;
}

bool IsOffset(std::string_view token) {
  return token.size() == 8 &&
         std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Adjective lemmas in data.adj may carry a syntactic marker such as
// "galore(ip)".
std::string_view StripAdjectiveMarker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    auto open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) return word.substr(0, open);
  }
  return word;
}

// data.pos line:
//   synset_offset lex_filenum ss_type w_cnt word lex_id [word lex_id...] ...
// w_cnt is a two-digit hexadecimal number.
void ReadDataFile(const std::string &path, char pos_letter,
                  SynonymStore *store) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::string line;
  std::size_t line_number = 0;
  std::vector<std::string> lemmas;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsLicenseLine(line) || IsBlank(line)) continue;
    auto fail = [&](const std::string &why) {
      throw Error(ErrorCode::kMalformedDataLine,
                  path + ":" + std::to_string(line_number) + ": " + why);
    };
    std::vector<std::string> tokens = SplitWhitespace(line);
    if (tokens.size() < 6) fail("too few fields");
    if (!IsOffset(tokens[0])) fail("bad synset offset '" + tokens[0] + "'");
    std::size_t word_count = 0;
    if (!ParseUnsigned(tokens[3], 16, &word_count) || word_count == 0) {
      fail("bad word count '" + tokens[3] + "'");
    }
    if (tokens.size() < 4 + 2 * word_count) fail("word list truncated");
    lemmas.clear();
    for (std::size_t i = 0; i < word_count; ++i) {
      lemmas.emplace_back(StripAdjectiveMarker(tokens[4 + 2 * i]));
    }
    store->AddSynset(MakeId(pos_letter, tokens[0]), lemmas);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure on " + path);
}

// index.pos line:
//   lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt
//   synset_offset [synset_offset...]
void ReadIndexFile(const std::string &path, char pos_letter,
                   SynonymStore *store) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsLicenseLine(line) || IsBlank(line)) continue;
    auto fail = [&](const std::string &why) {
      throw Error(ErrorCode::kMalformedIndexLine,
                  path + ":" + std::to_string(line_number) + ": " + why);
    };
    std::vector<std::string> tokens = SplitWhitespace(line);
    if (tokens.size() < 6) fail("too few fields");
    std::size_t synset_count = 0;
    std::size_t pointer_count = 0;
    if (!ParseUnsigned(tokens[2], 10, &synset_count) || synset_count == 0) {
      fail("bad synset_cnt '" + tokens[2] + "'");
    }
    if (!ParseUnsigned(tokens[3], 10, &pointer_count)) {
      fail("bad p_cnt '" + tokens[3] + "'");
    }
    const std::size_t first_offset = 4 + pointer_count + 2;
    if (tokens.size() != first_offset + synset_count) {
      fail("expected " + std::to_string(first_offset + synset_count) +
           " fields, found " + std::to_string(tokens.size()));
    }
    for (std::size_t i = first_offset; i < tokens.size(); ++i) {
      if (!IsOffset(tokens[i])) fail("bad synset offset '" + tokens[i] + "'");
      SynonymStore::SynsetId id = MakeId(pos_letter, tokens[i]);
      if (!store->HasSynset(id)) fail("unknown synset " + id);
      store->AddLemma(tokens[0], id);
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure on " + path);
}

}  // namespace

std::string SynonymStore::Normalize(std::string_view lemma) {
  std::string out = ToLower(lemma);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

void SynonymStore::AddSynset(const SynsetId &id,
                             std::span<const std::string> lemmas) {
  std::vector<std::string> &members = members_[id];
  for (const std::string &lemma : lemmas) {
    members.push_back(Normalize(lemma));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

void SynonymStore::AddLemma(std::string_view lemma, const SynsetId &id) {
  std::string key = Normalize(lemma);
  std::vector<std::string> &members = members_[id];
  auto pos = std::lower_bound(members.begin(), members.end(), key);
  if (pos == members.end() || *pos != key) members.insert(pos, key);

  std::vector<SynsetId> &ids = lemma_index_[key];
  auto at = std::lower_bound(ids.begin(), ids.end(), id);
  if (at == ids.end() || *at != id) ids.insert(at, id);
}

bool SynonymStore::HasSynset(const SynsetId &id) const {
  return members_.count(id) > 0;
}

std::vector<SynonymStore::SynsetId> SynonymStore::SynsetsOf(
    std::string_view word) const {
  auto it = lemma_index_.find(Normalize(word));
  if (it == lemma_index_.end()) return {};
  return it->second;
}

std::vector<std::string> SynonymStore::Members(const SynsetId &id) const {
  auto it = members_.find(id);
  if (it == members_.end()) return {};
  return it->second;
}

std::size_t SynonymStore::SynonymCount(std::string_view word) const {
  const std::string key = Normalize(word);
  auto it = lemma_index_.find(key);
  if (it == lemma_index_.end()) return 0;
  std::vector<std::string_view> synonyms;
  for (const SynsetId &id : it->second) {
    for (const std::string &member : members_.at(id)) {
      if (member != key) synonyms.push_back(member);
    }
  }
  std::sort(synonyms.begin(), synonyms.end());
  return static_cast<std::size_t>(
      std::unique(synonyms.begin(), synonyms.end()) - synonyms.begin());
}

SynonymStore LoadWordNet(const std::string &directory) {
  namespace fs = std::filesystem;
  for (const PosFiles &pos : kPosFiles) {
    for (const char *prefix : {"index.", "data."}) {
      fs::path file = fs::path(directory) / (std::string(prefix) + pos.suffix);
      if (!fs::is_regular_file(file)) {
        throw Error(ErrorCode::kMissingFile, file.string() + " not found");
      }
    }
  }
  SynonymStore store;
  // Data files first so index lines can be checked against known synsets.
  for (const PosFiles &pos : kPosFiles) {
    ReadDataFile((fs::path(directory) / (std::string("data.") + pos.suffix))
                     .string(),
                 pos.letter, &store);
  }
  for (const PosFiles &pos : kPosFiles) {
    ReadIndexFile((fs::path(directory) / (std::string("index.") + pos.suffix))
                      .string(),
                  pos.letter, &store);
  }
  return store;
}

}  // namespace cwi
