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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <utility>

#include "cwi/error.h"

namespace cwi {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::size_t ParseOffset(std::string_view text) {
  std::size_t value = 0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kMalformedLine,
                "offset '" + std::string(text) + "' is not a non-negative integer");
  }
  return value;
}

Label ParseLabel(std::string_view text) {
  if (text == "0") return Label::kSimple;
  if (text == "1") return Label::kComplex;
  throw Error(ErrorCode::kBadLabel,
              "label '" + std::string(text) + "' is not 0 or 1");
}

}  // namespace

Dataset::Dataset(std::vector<Instance> instances, bool labeled)
    : instances_(std::move(instances)), labeled_(labeled) {
  if (instances_.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no instances");
  }
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    if (instances_[i].label.has_value() != labeled_) {
      throw Error(ErrorCode::kBadFieldCount,
                  "instance " + std::to_string(i) +
                      (labeled_ ? " lacks a label" : " carries a label"));
    }
  }
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> SplitFields(std::string_view text,
                                          char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(text.substr(start));
      return fields;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view StripCarriageReturn(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (!IsSpace(c)) return false;
  }
  return true;
}

Instance ParseInstance(std::string_view line, bool labeled) {
  line = StripCarriageReturn(line);
  std::vector<std::string_view> fields = SplitFields(line, '\t');
  if (fields.size() != 3 && fields.size() != 4) {
    throw Error(ErrorCode::kMalformedLine,
                "expected 3 or 4 tab-separated fields, found " +
                    std::to_string(fields.size()));
  }
  const std::size_t expected = labeled ? 4 : 3;
  if (fields.size() != expected) {
    throw Error(ErrorCode::kBadFieldCount,
                std::string(labeled ? "labeled" : "unlabeled") +
                    " input needs " + std::to_string(expected) +
                    " fields, found " + std::to_string(fields.size()));
  }

  Instance instance;
  instance.tokens = SplitWhitespace(fields[0]);
  instance.target_word = std::string(fields[1]);
  instance.offset = ParseOffset(fields[2]);
  if (labeled) instance.label = ParseLabel(fields[3]);

  if (instance.offset >= instance.tokens.size()) {
    throw Error(ErrorCode::kOffsetOutOfRange,
                "offset " + std::to_string(instance.offset) +
                    " but sentence has " +
                    std::to_string(instance.tokens.size()) + " tokens");
  }
  const std::string &token = instance.tokens[instance.offset];
  if (token != instance.target_word) {
    throw Error(ErrorCode::kTokenMismatch,
                "token " + std::to_string(instance.offset) + " is '" + token +
                    "', target word is '" + instance.target_word + "'");
  }
  return instance;
}

std::string FormatInstance(const Instance &instance) {
  std::string line;
  for (std::size_t i = 0; i < instance.tokens.size(); ++i) {
    if (i > 0) line += ' ';
    line += instance.tokens[i];
  }
  line += '\t';
  line += instance.target_word;
  line += '\t';
  line += std::to_string(instance.offset);
  if (instance.label) {
    line += '\t';
    line += std::to_string(ToInt(*instance.label));
  }
  return line;
}

Dataset ReadDataset(std::istream &in, bool labeled,
                    const std::string &source_name) {
  std::vector<Instance> instances;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    try {
      instances.push_back(ParseInstance(line, labeled));
    } catch (const Error &e) {
      Rethrow(e, source_name + ":" + std::to_string(line_number));
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoError, "read failure on " + source_name);
  }
  if (instances.empty()) {
    throw Error(ErrorCode::kEmptyDataset, source_name + " has no instances");
  }
  return Dataset(std::move(instances), labeled);
}

Dataset LoadDataset(const std::string &path, bool labeled) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ReadDataset(in, labeled, path);
}

std::string FormatPredictionLine(std::string_view input_line, Label predicted,
                                 double probability_complex) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "\t%d\t%.6f", ToInt(predicted),
                probability_complex);
  std::string out(StripCarriageReturn(input_line));
  out += buffer;
  return out;
}

}  // namespace cwi
