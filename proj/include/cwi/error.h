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

#ifndef CWI_ERROR_H_
#define CWI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwi {

enum class ErrorCode {
  kIoError,
  // Instance files.
  kMalformedLine,
  kBadFieldCount,
  kOffsetOutOfRange,
  kTokenMismatch,
  kBadLabel,
  kEmptyDataset,
  // Resources.
  kMalformedCount,
  kMissingFile,
  kMalformedIndexLine,
  kMalformedDataLine,
  kShortLine,
  kMalformedRecord,
  kBadTag,
  kEmptySentence,
  // Features.
  kEmptyWord,
  kBadFeatureMask,
  kMissingFeature,
  // Learning.
  kEmptyCounts,
  kUnlabeledData,
  kSingleClassData,
  kBadConfig,
  kBadThreshold,
  kSchemaVersionMismatch,
  kCorruptModel,
  // Evaluation.
  kLengthMismatch,
  kEmptyMatrix,
  kBadK,
  kTooFewPerClass,
};

// Stable identifier used in messages, e.g. "TokenMismatch".
std::string_view ErrorCodeName(ErrorCode code);

// All toolkit failures are reported through this exception. The message
// carries location context (file, line, fold) where one is available.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }
  // Message without the error-code prefix.
  const std::string &detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Rethrows `error` with `context` prepended to its message.
[[noreturn]] void Rethrow(const Error &error, const std::string &context);

}  // namespace cwi

#endif  // CWI_ERROR_H_
