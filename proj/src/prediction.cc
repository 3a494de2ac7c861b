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

#include "cwi/prediction.h"

#include <string>

#include "cwi/error.h"

namespace cwi {

Prediction Classify(double probability_complex, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kBadThreshold,
                "threshold " + std::to_string(threshold) + " is not in (0, 1)");
  }
  if (!(probability_complex >= 0.0 && probability_complex <= 1.0)) {
    throw Error(ErrorCode::kBadThreshold,
                "probability " + std::to_string(probability_complex) +
                    " is not in [0, 1]");
  }
  Prediction p;
  p.probability_complex = probability_complex;
  p.threshold_used = threshold;
  p.predicted_label =
      probability_complex >= threshold ? Label::kComplex : Label::kSimple;
  return p;
}

}  // namespace cwi
