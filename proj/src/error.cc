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

#include "cwi/error.h"

namespace cwi {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kBadFieldCount: return "BadFieldCount";
    case ErrorCode::kOffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCode::kTokenMismatch: return "TokenMismatch";
    case ErrorCode::kBadLabel: return "BadLabel";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kMalformedCount: return "MalformedCount";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kMalformedIndexLine: return "MalformedIndexLine";
    case ErrorCode::kMalformedDataLine: return "MalformedDataLine";
    case ErrorCode::kShortLine: return "ShortLine";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kBadTag: return "BadTag";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kBadFeatureMask: return "BadFeatureMask";
    case ErrorCode::kMissingFeature: return "MissingFeature";
    case ErrorCode::kEmptyCounts: return "EmptyCounts";
    case ErrorCode::kUnlabeledData: return "UnlabeledData";
    case ErrorCode::kSingleClassData: return "SingleClassData";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kBadThreshold: return "BadThreshold";
    case ErrorCode::kSchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::kCorruptModel: return "CorruptModel";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kTooFewPerClass: return "TooFewPerClass";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void Rethrow(const Error &error, const std::string &context) {
  throw Error(error.code(), context + ": " + error.detail());
}

}  // namespace cwi
