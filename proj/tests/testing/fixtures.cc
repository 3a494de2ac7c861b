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

#include "testing/fixtures.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cwi/random.h"

namespace cwi::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::uint64_t counter = 0;
  Rng rng(DeriveSeed(static_cast<std::uint64_t>(
                         fs::file_time_type::clock::now().time_since_epoch().count()),
                     {++counter}));
  for (int attempt = 0; attempt < 100; ++attempt) {
    char name[64];
    std::snprintf(name, sizeof(name), "cwi-test-%016llx",
                  static_cast<unsigned long long>(rng.Next()));
    fs::path candidate = fs::temp_directory_path() / name;
    if (fs::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string MrcRecord(const std::string &word, int cnc) {
  // Columns 1-51 hold the numeric and flag fields; only CNC (29-31) varies.
  std::string line(51, '0');
  char cnc_text[8];
  std::snprintf(cnc_text, sizeof(cnc_text), "%03d", cnc);
  line.replace(28, 3, cnc_text);
  std::string upper = word;
  for (char &c : upper) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return line + upper + "|" + upper + "|" + upper + "|1";
}

void WriteWordNet(const std::string &dir,
                  const std::vector<SynsetFixture> &synsets) {
  const std::string license =
      "  1 This software and database is being provided to you, the LICENSEE,\n"
      "  2 by Princeton University under the following license.\n";
  const std::map<char, std::string> files = {
      {'n', "noun"}, {'v', "verb"}, {'a', "adj"}, {'r', "adv"}};
  for (const auto &[pos, suffix] : files) {
    std::ostringstream data;
    data << license;
    std::map<std::string, std::vector<std::uint32_t>> index;
    for (const SynsetFixture &s : synsets) {
      if (s.pos != pos) continue;
      char head[64];
      std::snprintf(head, sizeof(head), "%08u 05 %c %02x", s.offset, pos,
                    static_cast<unsigned>(s.words.size()));
      data << head;
      for (const std::string &w : s.words) data << ' ' << w << " 0";
      data << " 000 | fixture gloss\n";
      for (const std::string &w : s.words) {
        std::string lemma = w;
        auto paren = lemma.find('(');
        if (paren != std::string::npos) lemma = lemma.substr(0, paren);
        for (char &c : lemma) {
          if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        index[lemma].push_back(s.offset);
      }
    }
    std::ostringstream idx;
    idx << license;
    for (const auto &[lemma, offsets] : index) {
      idx << lemma << ' ' << pos << ' ' << offsets.size() << " 1 @ "
          << offsets.size() << " 0";
      for (std::uint32_t off : offsets) {
        char text[16];
        std::snprintf(text, sizeof(text), "%08u", off);
        idx << ' ' << text;
      }
      idx << "  \n";
    }
    WriteFile((fs::path(dir) / ("data." + suffix)).string(), data.str());
    WriteFile((fs::path(dir) / ("index." + suffix)).string(), idx.str());
  }
}

namespace {

struct VocabularyWord {
  std::string text;
  double complexity;
  std::string tag;
};

std::string RandomWord(Rng &rng, std::size_t length) {
  static const char kLetters[] = "abcdefghijklmnoprstuvwz";
  std::string w;
  for (std::size_t i = 0; i < length; ++i) {
    w += kLetters[rng.Below(sizeof(kLetters) - 1)];
  }
  return w;
}

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

SyntheticCorpus WriteSyntheticCorpus(const std::string &dir,
                                     std::size_t instances,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VocabularyWord> vocabulary;
  std::set<std::string> used = {"the", "of", "and", "a"};
  const std::vector<std::string> tags = {"NN", "VB", "JJ", "NNS", "VBD"};
  while (vocabulary.size() < 400) {
    const double c = rng.Uniform();
    const std::size_t length = 3 + static_cast<std::size_t>(c * 8) + rng.Below(3);
    std::string w = RandomWord(rng, length);
    if (!used.insert(w).second) continue;
    vocabulary.push_back({w, c, tags[rng.Below(tags.size())]});
  }

  SyntheticCorpus corpus;
  corpus.instances = instances;
  corpus.resources.frequency_table = (fs::path(dir) / "freq.tsv").string();
  corpus.resources.wordnet_dir = (fs::path(dir) / "wordnet").string();
  corpus.resources.mrc_file = (fs::path(dir) / "mrc2.dct").string();
  corpus.resources.tagger_lexicon = (fs::path(dir) / "lexicon.tsv").string();
  corpus.data_path = (fs::path(dir) / "train.tsv").string();
  corpus.unlabeled_path = (fs::path(dir) / "test.tsv").string();
  fs::create_directories(corpus.resources.wordnet_dir);

  std::ostringstream freq, mrc, lexicon;
  freq << "the\t90000000\nof\t80000000\nand\t70000000\na\t60000000\n";
  lexicon << "the\tDT\nof\tIN\nand\tCC\na\tDT\n";
  std::vector<SynsetFixture> synsets;
  std::uint32_t offset = 1000;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    const VocabularyWord &w = vocabulary[i];
    const double log_count = 7.0 * (1.0 - w.complexity) + rng.Uniform() - 0.5;
    freq << w.text << '\t'
         << static_cast<std::uint64_t>(std::pow(10.0, std::max(0.0, log_count)))
         << '\n';
    if (rng.Uniform() < 0.6) {
      const int cnc = std::clamp(
          static_cast<int>(100 + 600 * (1.0 - w.complexity) +
                           (rng.Uniform() - 0.5) * 150),
          100, 700);
      mrc << MrcRecord(w.text, cnc) << '\n';
    } else {
      mrc << MrcRecord(w.text, 0) << '\n';
    }
    if (rng.Uniform() < 0.9) lexicon << w.text << '\t' << w.tag << '\n';
    const std::size_t senses =
        static_cast<std::size_t>(std::lround(4.0 * (1.0 - w.complexity)));
    for (std::size_t s = 0; s < senses; ++s) {
      SynsetFixture synset{'n', offset, {w.text}};
      offset += 100;
      const std::size_t extra = 1 + rng.Below(3);
      for (std::size_t e = 0; e < extra; ++e) {
        const std::string &other = vocabulary[rng.Below(vocabulary.size())].text;
        if (std::find(synset.words.begin(), synset.words.end(), other) ==
            synset.words.end()) {
          synset.words.push_back(other);
        }
      }
      synsets.push_back(std::move(synset));
    }
  }
  WriteFile(corpus.resources.frequency_table, freq.str());
  WriteFile(corpus.resources.mrc_file, mrc.str());
  WriteFile(corpus.resources.tagger_lexicon, lexicon.str());
  WriteWordNet(corpus.resources.wordnet_dir, synsets);

  const std::vector<std::string> function_words = {"the", "of", "and", "a", ","};
  std::ostringstream labeled, unlabeled;
  for (std::size_t n = 0; n < instances; ++n) {
    const std::size_t length = 5 + rng.Below(10);
    const std::size_t target = rng.Below(length);
    const VocabularyWord &w = vocabulary[rng.Below(vocabulary.size())];
    std::string sentence;
    for (std::size_t t = 0; t < length; ++t) {
      if (t > 0) sentence += ' ';
      if (t == target) {
        sentence += w.text;
      } else if (rng.Uniform() < 0.4) {
        sentence += function_words[rng.Below(function_words.size())];
      } else {
        sentence += vocabulary[rng.Below(vocabulary.size())].text;
      }
    }
    const int label = rng.Uniform() < Sigmoid(8.0 * (w.complexity - 0.6)) ? 1 : 0;
    unlabeled << sentence << '\t' << w.text << '\t' << target << '\n';
    labeled << sentence << '\t' << w.text << '\t' << target << '\t' << label
            << '\n';
  }
  WriteFile(corpus.data_path, labeled.str());
  WriteFile(corpus.unlabeled_path, unlabeled.str());
  return corpus;
}

FeatureDataset SeparableDataset(std::size_t n, std::uint64_t seed,
                                double margin) {
  Rng rng(seed);
  std::vector<FeatureVector> vectors;
  while (vectors.size() < n) {
    const double x = rng.Uniform();
    const double y = rng.Uniform();
    if (std::abs(x + y - 1.0) < margin) continue;
    FeatureVector v;
    v.log_frequency = x;
    v.inverse_length = y;
    v.pos_tag = "NN";
    v.label = x + y > 1.0 ? Label::kComplex : Label::kSimple;
    vectors.push_back(v);
  }
  return FeatureDataset(std::move(vectors),
                        FeatureMask::Of({FeatureId::kLogFrequency,
                                         FeatureId::kInverseLength}));
}

FeatureDataset MixedDataset(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::string> tags = {"NN", "VB", "JJ", "RB", "UNK"};
  std::vector<FeatureVector> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector v;
    v.log_frequency = 7.0 * rng.Uniform();
    v.pos_tag = tags[rng.Below(tags.size())];
    v.synonym_count = static_cast<std::int64_t>(rng.Below(21));
    v.inverse_length = 1.0 / static_cast<double>(1 + rng.Below(15));
    v.concreteness =
        rng.Uniform() < 0.4 ? 0 : 100 + static_cast<int>(rng.Below(601));
    const double score = -(v.log_frequency - 3.5) -
                         0.2 * (static_cast<double>(v.synonym_count) - 5.0) +
                         (v.pos_tag == "VB" ? 1.0 : 0.0);
    v.label = rng.Uniform() < Sigmoid(score) ? Label::kComplex : Label::kSimple;
    vectors.push_back(v);
  }
  return FeatureDataset(std::move(vectors), FeatureMask::All());
}

}  // namespace cwi::testing
