//
// Copyright 2026 The Stresskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STRESSKIT_EVAL_H_
#define STRESSKIT_EVAL_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stresskit/corpus.h"

namespace stresskit {

// Plain id -> label assignment. Both confusion axes take one of these, so
// gold-vs-predictions and predictions-vs-predictions views use the same code.
using Labeling = std::map<std::string, NliLabel>;

Labeling GoldLabeling(const NliDataset& dataset);
Labeling PredictionLabeling(const PredictionSet& predictions);

// 3x3 transition counts over the shared ids of two labelings. The axis
// sources are free-form names ("gold", "dev predictions", ...) recorded so a
// printed matrix states what its rows mean.
class ConfusionMatrix {
 public:
  ConfusionMatrix(std::string reference_source, std::string prediction_source);

  void Add(NliLabel reference, NliLabel prediction);
  std::size_t count(NliLabel reference, NliLabel prediction) const;
  std::size_t RowTotal(NliLabel reference) const;
  std::size_t total() const;
  // count / row total, as a percentage; 0 for an empty row.
  double RowRate(NliLabel reference, NliLabel prediction) const;

  const std::string& reference_source() const { return reference_source_; }
  const std::string& prediction_source() const { return prediction_source_; }

 private:
  std::string reference_source_;
  std::string prediction_source_;
  std::array<std::array<std::size_t, 3>, 3> counts_{};
};

// Counts transitions over the id intersection, which must be nonempty.
ConfusionMatrix Confusion(const Labeling& reference, const Labeling& prediction,
                          std::string reference_source = "reference",
                          std::string prediction_source = "prediction");

// Classification accuracy, percent, full precision (format at the edges).
// Missing predictions are an error listing the absent ids unless
// allow_missing, which scores them as wrong.
double NliAccuracy(const NliDataset& dataset, const PredictionSet& predictions,
                   bool allow_missing = false);

// Canonical answer normalization: lowercase, strip punctuation, drop the
// articles a/an/the, collapse whitespace.
std::string NormalizeAnswer(std::string_view answer);

// Percent of questions whose normalized prediction equals any normalized
// gold answer. Missing handling as in NliAccuracy.
double ExactMatch(const SquadDataset& dataset, const PredictionSet& predictions,
                  bool allow_missing = false);

// 100 * (original - stressed) / original. original_pct must be positive.
double Reduction(double original_pct, double stressed_pct);

// Accuracy of always guessing the most frequent gold label, percent.
double MajorityClass(const NliDataset& dataset);

// Minimum over per-targeted-model results, excluding self_name when given
// (adversaries built against the scored model itself don't count).
double WorstCase(const std::map<std::string, double>& results,
                 const std::optional<std::string>& self_name = std::nullopt);

// One report row; value and reduction are percentages at full precision.
struct EvalRow {
  std::string dataset;
  std::string metric;  // "accuracy" or "exact_match"
  double value = 0.0;
  std::optional<double> reduction;
  double coverage = 1.0;  // fraction of examples with predictions
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

// Percent with one decimal, round half away from zero ("66.7", "28.8").
std::string FormatPercent(double value);

// CSV columns: dataset,metric,value,reduction,coverage.
std::string RenderReportCsv(const EvalReport& report);
// Aligned table; rows with a reduction get a second "(xx.x)" line under the
// value, mirroring the bracket convention of results tables.
std::string RenderReportText(const EvalReport& report);

// Writes both renderings (atomically, overwrite semantics).
void EmitReport(const EvalReport& report, const std::string& csv_path,
                const std::string& text_path);

}  // namespace stresskit

#endif  // STRESSKIT_EVAL_H_
