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

#ifndef CWI_PREDICTION_H_
#define CWI_PREDICTION_H_

#include "cwi/corpus_io.h"

namespace cwi {

struct Prediction {
  double probability_complex = 0.0;
  Label predicted_label = Label::kSimple;
  double threshold_used = 0.5;
};

// Label 1 iff probability_complex >= threshold. Throws kBadThreshold unless
// threshold is in (0, 1) and probability_complex in [0, 1].
Prediction Classify(double probability_complex, double threshold);

}  // namespace cwi

#endif  // CWI_PREDICTION_H_
