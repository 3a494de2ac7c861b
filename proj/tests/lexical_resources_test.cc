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
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "cwi/error.h"
#include "cwi/random.h"
#include "testing/fixtures.h"

namespace cwi {
namespace {

using testing::CaughtCode;
using testing::TempDir;
using testing::WriteFile;

TEST_CASE("frequency table lookups") {
  TempDir dir;
  const std::string path = dir.File("freq.tsv");
  WriteFile(path, "the\t1000\ncat\t42\n\n");
  FrequencyStore store = LoadFrequencyTable(path);
  CHECK(store.Frequency("the") == 1000);
  CHECK(store.Frequency("cat") == 42);
  CHECK(store.Frequency("The") == 1000);
  CHECK(store.Frequency("zebra") == 0);
}

TEST_CASE("frequency table merges case variants") {
  TempDir dir;
  const std::string path = dir.File("freq.tsv");
  WriteFile(path, "Cat\t40\ncat\t2\r\n");
  CHECK(LoadFrequencyTable(path).Frequency("CAT") == 42);
}

TEST_CASE("frequency table errors") {
  TempDir dir;
  const std::string path = dir.File("freq.tsv");
  WriteFile(path, "the\t-1\n");
  CHECK(CaughtCode([&] { LoadFrequencyTable(path); }) ==
        ErrorCode::kMalformedCount);
  WriteFile(path, "the\tmany\n");
  CHECK(CaughtCode([&] { LoadFrequencyTable(path); }) ==
        ErrorCode::kMalformedCount);
  WriteFile(path, "the 12\n");
  CHECK(CaughtCode([&] { LoadFrequencyTable(path); }) ==
        ErrorCode::kMalformedLine);
  CHECK(CaughtCode([&] { LoadFrequencyTable(dir.File("absent.tsv")); }) ==
        ErrorCode::kIoError);
}

TEST_CASE("wordnet synonym count for dog") {
  TempDir dir;
  testing::WriteWordNet(
      dir.path().string(),
      {{'n', 2084071, {"dog", "domestic_dog", "Canis_familiaris"}}});
  SynonymStore store = LoadWordNet(dir.path().string());
  CHECK(store.SynonymCount("dog") == 2);
  CHECK(store.SynonymCount("Dog") == 2);
  CHECK(store.SynonymCount("domestic_dog") == 2);
  CHECK(store.SynonymCount("domestic dog") == 2);
  CHECK(store.SynonymCount("zebra") == 0);
  CHECK(store.Members("n:02084071") ==
        std::vector<std::string>{"canis familiaris", "dog", "domestic dog"});
}

TEST_CASE("synonyms are a union over synsets") {
  TempDir dir;
  testing::WriteWordNet(dir.path().string(), {{'n', 100, {"w", "x", "y"}},
                                              {'n', 200, {"w", "y", "z"}}});
  SynonymStore store = LoadWordNet(dir.path().string());
  CHECK(store.SynonymCount("w") == 3);
  CHECK(store.SynonymCount("x") == 2);
  CHECK(store.SynonymCount("z") == 2);
}

TEST_CASE("synonyms union across parts of speech") {
  TempDir dir;
  // Same offset in two files must not collide.
  testing::WriteWordNet(dir.path().string(), {{'n', 100, {"run", "tally"}},
                                              {'v', 100, {"run", "sprint"}}});
  SynonymStore store = LoadWordNet(dir.path().string());
  CHECK(store.SynonymCount("run") == 2);
  CHECK(store.SynsetsOf("run") == std::vector<std::string>{"n:00000100",
                                                           "v:00000100"});
}

TEST_CASE("synonym count matches a brute-force oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<testing::SynsetFixture> synsets;
    const std::size_t n = 1 + rng.Below(6);
    for (std::size_t s = 0; s < n; ++s) {
      testing::SynsetFixture synset{"nvar"[rng.Below(4)],
                                    static_cast<std::uint32_t>(100 + s), {}};
      std::set<std::string> words;
      const std::size_t m = 1 + rng.Below(4);
      while (words.size() < m) words.insert(std::string(1, 'a' + rng.Below(8)));
      synset.words.assign(words.begin(), words.end());
      synsets.push_back(synset);
    }
    TempDir dir;
    testing::WriteWordNet(dir.path().string(), synsets);
    SynonymStore store = LoadWordNet(dir.path().string());
    for (char c = 'a'; c < 'a' + 8; ++c) {
      const std::string word(1, c);
      std::set<std::string> expected;
      for (const auto &synset : synsets) {
        if (std::find(synset.words.begin(), synset.words.end(), word) ==
            synset.words.end()) {
          continue;
        }
        expected.insert(synset.words.begin(), synset.words.end());
      }
      expected.erase(word);
      CHECK(store.SynonymCount(word) == expected.size());
    }
  }
}

TEST_CASE("adjective markers are stripped") {
  TempDir dir;
  testing::WriteWordNet(dir.path().string(),
                        {{'a', 300, {"galore(ip)", "abundant"}}});
  SynonymStore store = LoadWordNet(dir.path().string());
  CHECK(store.SynonymCount("galore") == 1);
  CHECK(store.SynonymCount("abundant") == 1);
}

TEST_CASE("wordnet errors") {
  TempDir dir;
  testing::WriteWordNet(dir.path().string(), {{'n', 100, {"dog", "hound"}}});
  std::filesystem::remove(dir.path() / "data.verb");
  CHECK(CaughtCode([&] { LoadWordNet(dir.path().string()); }) ==
        ErrorCode::kMissingFile);

  testing::WriteWordNet(dir.path().string(), {{'n', 100, {"dog", "hound"}}});
  WriteFile(dir.File("index.noun"), "dog n 1 0\n");
  CHECK(CaughtCode([&] { LoadWordNet(dir.path().string()); }) ==
        ErrorCode::kMalformedIndexLine);
  // Index entry pointing at a synset absent from data.noun.
  WriteFile(dir.File("index.noun"), "dog n 1 0 1 0 00000999\n");
  CHECK(CaughtCode([&] { LoadWordNet(dir.path().string()); }) ==
        ErrorCode::kMalformedIndexLine);

  testing::WriteWordNet(dir.path().string(), {});
  WriteFile(dir.File("data.noun"), "00000100 05 n zz dog 0 | gloss\n");
  CHECK(CaughtCode([&] { LoadWordNet(dir.path().string()); }) ==
        ErrorCode::kMalformedDataLine);
}

TEST_CASE("mrc concreteness") {
  TempDir dir;
  const std::string path = dir.File("mrc2.dct");
  WriteFile(path, testing::MrcRecord("dog", 589) + "\n" +
                      testing::MrcRecord("idea", 0) + "\n" +
                      testing::MrcRecord("rock", 300) + "\n" +
                      testing::MrcRecord("rock", 450) + "\n" +
                      testing::MrcRecord("odd", 50) + "\n");
  ConcretenessStore store = LoadMrc(path);
  CHECK(store.Concreteness("dog") == 589);
  CHECK(store.Concreteness("DOG") == 589);
  CHECK(store.Concreteness("idea") == 0);
  CHECK(store.Concreteness("rock") == 450);
  CHECK(store.Concreteness("odd") == 0);
  CHECK(store.Concreteness("cat") == 0);
  CHECK(store.size() == 2);

  WriteFile(path, testing::MrcRecord("dog", 589) + "\n0000000000\n");
  CHECK(CaughtCode([&] { LoadMrc(path); }) == ErrorCode::kShortLine);
}

TEST_CASE("mrc record layout") {
  const std::string record = testing::MrcRecord("dog", 589);
  CHECK(record.substr(MrcLayout::kCncFirstColumn - 1, 3) == "589");
  CHECK(record.substr(MrcLayout::kWordFirstColumn - 1, 4) == "DOG|");
}

TEST_CASE("lexicon tagger") {
  LexiconTagger tagger({{"the", "DT"}, {"cat", "NN"}, {"Paris", "NNP"}});
  const std::vector<std::string> tokens = {"The", "cat", "quickly", "running",
                                           "jumped", "Paris", "zork"};
  const std::vector<std::string> tags = TagSentence(tagger, tokens);
  CHECK(tags == std::vector<std::string>{"DT", "NN", "RB", "VBG", "VBD", "NNP",
                                         "UNK"});
  CHECK(tagger.Tag(tokens) == tags);
  CHECK(CaughtCode([&] { TagSentence(tagger, std::vector<std::string>{}); }) ==
        ErrorCode::kEmptySentence);
}

TEST_CASE("tagger contract is enforced") {
  class ShortTagger : public PosTagger {
   public:
    std::vector<std::string> Tag(std::span<const std::string>) const override {
      return {"NN"};
    }
  };
  class BogusTagger : public PosTagger {
   public:
    std::vector<std::string> Tag(
        std::span<const std::string> tokens) const override {
      return std::vector<std::string>(tokens.size(), "NOUN");
    }
  };
  const std::vector<std::string> tokens = {"a", "b"};
  CHECK(CaughtCode([&] { TagSentence(ShortTagger(), tokens); }) ==
        ErrorCode::kBadTag);
  CHECK(CaughtCode([&] { TagSentence(BogusTagger(), tokens); }) ==
        ErrorCode::kBadTag);
}

TEST_CASE("penn inventory") {
  for (const char *tag : {"NN", "NNS", "VBZ", "PRP$", "WP$", "-LRB-", "$", "``",
                          "''", "."}) {
    CHECK(IsPennTag(tag));
  }
  CHECK_FALSE(IsPennTag("UNK"));
  CHECK_FALSE(IsPennTag("nn"));
  CHECK_FALSE(IsPennTag("HYPH"));
}

TEST_CASE("tagger lexicon file") {
  TempDir dir;
  const std::string path = dir.File("lexicon.tsv");
  WriteFile(path, "run\tVB\nrun\tNN\n\ndog\tNN\n");
  LexiconTagger tagger = LoadTaggerLexicon(path);
  CHECK(tagger.TagWord("run") == "VB");
  CHECK(tagger.size() == 2);
  WriteFile(path, "run\tVERB\n");
  CHECK(CaughtCode([&] { LoadTaggerLexicon(path); }) == ErrorCode::kBadTag);
  WriteFile(path, "run VB\n");
  CHECK(CaughtCode([&] { LoadTaggerLexicon(path); }) ==
        ErrorCode::kMalformedLine);
}

}  // namespace
}  // namespace cwi
