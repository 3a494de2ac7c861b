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

#ifndef CWI_METRICS_H_
#define CWI_METRICS_H_

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>

#include "cwi/corpus_io.h"

namespace cwi {

// Binary confusion counts with the complex class (1) as positive.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  ConfusionMatrix &operator+=(const ConfusionMatrix &other);
  bool operator==(const ConfusionMatrix &) const = default;
};

// Throws kLengthMismatch when the sequences differ in length.
ConfusionMatrix Confusion(std::span<const Label> predicted,
                          std::span<const Label> gold);

// Harmonic mean of p and r; 0 when both are 0.
double HarmonicMean(double p, double r);

struct ClassMetrics {
  // Indexed by class: [0] simple, [1] complex.
  std::array<double, 2> precision = {0, 0};
  std::array<double, 2> recall = {0, 0};
  std::array<double, 2> f_measure = {0, 0};
  std::array<std::size_t, 2> support = {0, 0};
  // Averages weighted by gold class prevalence.
  double weighted_precision = 0;
  double weighted_recall = 0;
  double weighted_f = 0;
  double accuracy = 0;
  double g_score = 0;
};

// Throws kEmptyMatrix for a matrix with no instances. Zero denominators give
// a precision or recall of 0.
ClassMetrics ComputeClassMetrics(const ConfusionMatrix &m);

// Harmonic mean of accuracy and recall of the complex class.
double GScore(const ConfusionMatrix &m);

// Table-style report: confusion matrix, per-class and weighted P/R/F rows,
// accuracy and G-score, reals to 3 decimals.
void WriteReport(const std::string &title, const ConfusionMatrix &m,
                 std::ostream &out);

}  // namespace cwi

#endif  // CWI_METRICS_H_
