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

#include "cwi/corpus_io.h"

#include <sstream>

#include "doctest.h"

#include "cwi/error.h"
#include "cwi/random.h"
#include "testing/fixtures.h"

namespace cwi {
namespace {

const char kMozart[] =
    "There are several stories about Mozart 's final illness and death , and "
    "it is not easy to be sure what happened .\thappened\t21\t0";
const char kAnoxic[] =
    "Although anoxic events have not happened for millions of years , the "
    "geological record shows that they happened many times in the past ."
    "\thappened\t5\t1";

using testing::CaughtCode;

TEST_CASE("parses the two published training instances") {
  Instance first = ParseInstance(kMozart, true);
  CHECK(first.target_word == "happened");
  CHECK(first.offset == 21);
  CHECK(first.tokens[21] == "happened");
  CHECK(first.tokens.size() == 23);
  CHECK(first.label == Label::kSimple);

  Instance second = ParseInstance(kAnoxic, true);
  CHECK(second.offset == 5);
  CHECK(second.tokens[5] == "happened");
  CHECK(second.label == Label::kComplex);
}

TEST_CASE("minimal line") {
  Instance i = ParseInstance("A cat sat .\tcat\t1\t1", true);
  CHECK(i.tokens == std::vector<std::string>{"A", "cat", "sat", "."});
  CHECK(i.target_word == "cat");
  CHECK(i.offset == 1);
  CHECK(i.label == Label::kComplex);
}

TEST_CASE("unlabeled line has no label") {
  Instance i = ParseInstance("A cat sat .\tcat\t1", false);
  CHECK_FALSE(i.label.has_value());
}

TEST_CASE("parse errors") {
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tdog\t1\t1", true); }) ==
        ErrorCode::kTokenMismatch);
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tCat\t1\t1", true); }) ==
        ErrorCode::kTokenMismatch);
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tcat\t4\t1", true); }) ==
        ErrorCode::kOffsetOutOfRange);
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tcat\t1\t2", true); }) ==
        ErrorCode::kBadLabel);
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tcat\t-1\t1", true); }) ==
        ErrorCode::kMalformedLine);
  CHECK(CaughtCode([] { ParseInstance("A cat sat . cat 1 1", true); }) ==
        ErrorCode::kMalformedLine);
  CHECK(CaughtCode([] { ParseInstance("A\tcat\tsat\t.\tcat\t1", true); }) ==
        ErrorCode::kMalformedLine);
  // Field count disagreeing with the labeled flag.
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tcat\t1\t1", false); }) ==
        ErrorCode::kBadFieldCount);
  CHECK(CaughtCode([] { ParseInstance("A cat sat .\tcat\t1", true); }) ==
        ErrorCode::kBadFieldCount);
}

TEST_CASE("carriage return is tolerated") {
  Instance i = ParseInstance("A cat sat .\tcat\t1\t0\r", true);
  CHECK(i.label == Label::kSimple);
}

TEST_CASE("load_dataset keeps order and skips blank lines") {
  testing::TempDir dir;
  const std::string path = dir.File("two.tsv");
  testing::WriteFile(path, std::string(kMozart) + "\n\n" + kAnoxic + "\n");
  Dataset d = LoadDataset(path, true);
  REQUIRE(d.size() == 2);
  CHECK(d[0].offset == 21);
  CHECK(d[1].offset == 5);
  CHECK(d.labeled());

  std::string ten;
  for (int i = 0; i < 10; ++i) {
    ten += "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9\tw" + std::to_string(i) + "\t" +
           std::to_string(i) + "\t" + std::to_string(i % 2) + "\n";
  }
  std::istringstream in(ten);
  Dataset many = ReadDataset(in, true, "ten");
  REQUIRE(many.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(many[i].offset == i);
}

TEST_CASE("load_dataset errors carry the line number") {
  std::istringstream empty("");
  CHECK(CaughtCode([&] { ReadDataset(empty, true, "empty"); }) ==
        ErrorCode::kEmptyDataset);

  std::istringstream bad("A cat sat .\tcat\t1\t1\nA cat sat .\tdog\t1\t1\n");
  try {
    ReadDataset(bad, true, "bad.tsv");
    FAIL("expected TokenMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kTokenMismatch);
    CHECK(std::string(e.what()).find("bad.tsv:2") != std::string::npos);
  }

  std::istringstream labeled(std::string(kMozart) + "\n");
  CHECK(CaughtCode([&] { ReadDataset(labeled, false, "x"); }) ==
        ErrorCode::kBadFieldCount);
  CHECK(CaughtCode([] { LoadDataset("/nonexistent/file.tsv", true); }) ==
        ErrorCode::kIoError);
}

TEST_CASE("format then parse is the identity") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Instance original;
    const std::size_t n = 1 + rng.Below(12);
    for (std::size_t t = 0; t < n; ++t) {
      std::string token;
      const std::size_t len = 1 + rng.Below(6);
      for (std::size_t c = 0; c < len; ++c) {
        token += static_cast<char>('!' + rng.Below(94));
      }
      original.tokens.push_back(token);
    }
    original.offset = rng.Below(n);
    original.target_word = original.tokens[original.offset];
    const bool labeled = rng.Below(2) == 1;
    if (labeled) original.label = rng.Below(2) ? Label::kComplex : Label::kSimple;
    CHECK(ParseInstance(FormatInstance(original), labeled) == original);
  }
}

TEST_CASE("prediction line appends label and probability") {
  CHECK(FormatPredictionLine("A cat sat .\tcat\t1", Label::kComplex, 0.6) ==
        "A cat sat .\tcat\t1\t1\t0.600000");
  CHECK(FormatPredictionLine("x\tx\t0\r", Label::kSimple, 1.0 / 3) ==
        "x\tx\t0\t0\t0.333333");
}

}  // namespace
}  // namespace cwi
