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

#include "cwi/metrics.h"

#include <cstdio>

#include "cwi/error.h"

namespace cwi {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void CheckNonEmpty(const ConfusionMatrix &m) {
  if (m.total() == 0) {
    throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  }
}

}  // namespace

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &other) {
  tp += other.tp;
  fp += other.fp;
  tn += other.tn;
  fn += other.fn;
  return *this;
}

ConfusionMatrix Confusion(std::span<const Label> predicted,
                          std::span<const Label> gold) {
  if (predicted.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(predicted.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold labels");
  }
  ConfusionMatrix m;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool p = predicted[i] == Label::kComplex;
    const bool g = gold[i] == Label::kComplex;
    if (p && g) ++m.tp;
    else if (p) ++m.fp;
    else if (g) ++m.fn;
    else ++m.tn;
  }
  return m;
}

double HarmonicMean(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

ClassMetrics ComputeClassMetrics(const ConfusionMatrix &m) {
  CheckNonEmpty(m);
  ClassMetrics out;
  // Class 1 is the positive class; class 0 swaps the roles of tp/tn and
  // fp/fn.
  out.precision[1] = Ratio(m.tp, m.tp + m.fp);
  out.recall[1] = Ratio(m.tp, m.tp + m.fn);
  out.precision[0] = Ratio(m.tn, m.tn + m.fn);
  out.recall[0] = Ratio(m.tn, m.tn + m.fp);
  out.support = {m.tn + m.fp, m.tp + m.fn};
  const double n = static_cast<double>(m.total());
  for (int c = 0; c < 2; ++c) {
    out.f_measure[c] = HarmonicMean(out.precision[c], out.recall[c]);
    const double w = static_cast<double>(out.support[c]) / n;
    out.weighted_precision += w * out.precision[c];
    out.weighted_recall += w * out.recall[c];
    out.weighted_f += w * out.f_measure[c];
  }
  out.accuracy = Ratio(m.tp + m.tn, m.total());
  out.g_score = HarmonicMean(out.accuracy, out.recall[1]);
  return out;
}

double GScore(const ConfusionMatrix &m) {
  CheckNonEmpty(m);
  return HarmonicMean(Ratio(m.tp + m.tn, m.total()), Ratio(m.tp, m.tp + m.fn));
}

void WriteReport(const std::string &title, const ConfusionMatrix &m,
                 std::ostream &out) {
  const ClassMetrics cm = ComputeClassMetrics(m);
  char line[160];
  out << title << '\n';
  out << "instances\t" << m.total() << '\n';
  out << "confusion\ttp=" << m.tp << "\tfp=" << m.fp << "\ttn=" << m.tn
      << "\tfn=" << m.fn << '\n';
  out << "class\tprecision\trecall\tf_measure\n";
  const char *names[2] = {"0 (Simple)", "1 (Complex)"};
  for (int c = 0; c < 2; ++c) {
    std::snprintf(line, sizeof(line), "%s\t%.3f\t%.3f\t%.3f\n", names[c],
                  cm.precision[c], cm.recall[c], cm.f_measure[c]);
    out << line;
  }
  std::snprintf(line, sizeof(line), "Weighted Average\t%.3f\t%.3f\t%.3f\n",
                cm.weighted_precision, cm.weighted_recall, cm.weighted_f);
  out << line;
  std::snprintf(line, sizeof(line), "accuracy\t%.3f\ng_score\t%.3f\n",
                cm.accuracy, cm.g_score);
  out << line;
}

}  // namespace cwi
