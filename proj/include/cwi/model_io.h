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

#ifndef CWI_MODEL_IO_H_
#define CWI_MODEL_IO_H_

#include <string>
#include <variant>

#include "cwi/naive_bayes.h"
#include "cwi/random_forest.h"

namespace cwi {

using Model = std::variant<RandomForestModel, NaiveBayesModel>;

inline constexpr int kModelSchemaVersion = 1;

// JSON text with `schema_version` as the first field, then `model_kind`,
// `feature_mask`, `config`, and `trees` or `nb_params`.
std::string SerializeModel(const Model &model);

// Throws kSchemaVersionMismatch for another schema version and
// kCorruptModel for anything else that does not parse.
Model DeserializeModel(const std::string &text);

void SaveModel(const Model &model, const std::string &path);
Model LoadModel(const std::string &path);

// Probability of the complex class under either model kind.
double PredictProbability(const Model &model, const FeatureVector &fv);

FeatureMask ModelFeatureMask(const Model &model);

}  // namespace cwi

#endif  // CWI_MODEL_IO_H_
