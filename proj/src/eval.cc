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

#include "stresskit/eval.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "stresskit/corpus_io.h"
#include "stresskit/error.h"
#include "stresskit/unicode.h"

namespace stresskit {
namespace {

constexpr std::size_t kMaxListedIds = 10;

std::size_t Index(NliLabel label) { return static_cast<std::size_t>(label); }

[[noreturn]] void ThrowMissing(const std::vector<std::string>& missing) {
  std::string message = std::to_string(missing.size()) +
                        " examples lack predictions: ";
  const std::size_t shown = std::min(missing.size(), kMaxListedIds);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) message += ", ";
    message += missing[i];
  }
  if (shown < missing.size()) message += ", ...";
  throw ValidationError(message);
}

void RequireTask(const PredictionSet& predictions, Task task) {
  if (predictions.task != task) {
    throw ValidationError(std::string("prediction set is for task ") +
                          std::string(ToString(predictions.task)) +
                          ", expected " + std::string(ToString(task)));
  }
}

}  // namespace

Labeling GoldLabeling(const NliDataset& dataset) {
  Labeling labeling;
  for (const NliExample& example : dataset.examples) {
    labeling[example.pair_id] = example.gold_label;
  }
  return labeling;
}

Labeling PredictionLabeling(const PredictionSet& predictions) {
  RequireTask(predictions, Task::kNli);
  Labeling labeling;
  for (const auto& [id, text] : predictions.entries) {
    const auto label = ParseNliLabel(text);
    if (!label) {
      throw ValidationError("prediction for " + id + " has unknown label \"" +
                            text + "\"");
    }
    labeling[id] = *label;
  }
  return labeling;
}

ConfusionMatrix::ConfusionMatrix(std::string reference_source,
                                 std::string prediction_source)
    : reference_source_(std::move(reference_source)),
      prediction_source_(std::move(prediction_source)) {}

void ConfusionMatrix::Add(NliLabel reference, NliLabel prediction) {
  ++counts_[Index(reference)][Index(prediction)];
}

std::size_t ConfusionMatrix::count(NliLabel reference,
                                   NliLabel prediction) const {
  return counts_[Index(reference)][Index(prediction)];
}

std::size_t ConfusionMatrix::RowTotal(NliLabel reference) const {
  const auto& row = counts_[Index(reference)];
  return row[0] + row[1] + row[2];
}

std::size_t ConfusionMatrix::total() const {
  std::size_t sum = 0;
  for (const auto& row : counts_) sum += row[0] + row[1] + row[2];
  return sum;
}

double ConfusionMatrix::RowRate(NliLabel reference, NliLabel prediction) const {
  const std::size_t row_total = RowTotal(reference);
  if (row_total == 0) return 0.0;
  return 100.0 * static_cast<double>(count(reference, prediction)) /
         static_cast<double>(row_total);
}

ConfusionMatrix Confusion(const Labeling& reference, const Labeling& prediction,
                          std::string reference_source,
                          std::string prediction_source) {
  ConfusionMatrix matrix(std::move(reference_source),
                         std::move(prediction_source));
  for (const auto& [id, ref_label] : reference) {
    const auto it = prediction.find(id);
    if (it != prediction.end()) matrix.Add(ref_label, it->second);
  }
  if (matrix.total() == 0) {
    throw ValidationError("confusion: the labelings share no ids");
  }
  return matrix;
}

double NliAccuracy(const NliDataset& dataset, const PredictionSet& predictions,
                   bool allow_missing) {
  RequireTask(predictions, Task::kNli);
  if (dataset.examples.empty()) {
    throw ValidationError("cannot score an empty dataset");
  }
  std::vector<std::string> missing;
  std::size_t correct = 0;
  for (const NliExample& example : dataset.examples) {
    const auto it = predictions.entries.find(example.pair_id);
    if (it == predictions.entries.end()) {
      missing.push_back(example.pair_id);
      continue;
    }
    const auto label = ParseNliLabel(it->second);
    if (!label) {
      throw ValidationError("prediction for " + example.pair_id +
                            " has unknown label \"" + it->second + "\"");
    }
    if (*label == example.gold_label) ++correct;
  }
  if (!missing.empty() && !allow_missing) ThrowMissing(missing);
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(dataset.examples.size());
}

std::string NormalizeAnswer(std::string_view answer) {
  // Lowercase first (Unicode-aware), then work bytewise: the characters
  // removed below are all ASCII.
  const std::string lowered = ToLowerUtf8(answer);
  std::string stripped;
  stripped.reserve(lowered.size());
  for (const char c : lowered) {
    if (std::ispunct(static_cast<unsigned char>(c))) continue;
    stripped += c;
  }
  std::string out;
  std::size_t i = 0;
  while (i < stripped.size()) {
    while (i < stripped.size() &&
           std::isspace(static_cast<unsigned char>(stripped[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < stripped.size() &&
           !std::isspace(static_cast<unsigned char>(stripped[i]))) {
      ++i;
    }
    const std::string_view token(stripped.data() + start, i - start);
    if (token.empty() || token == "a" || token == "an" || token == "the") {
      continue;
    }
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

double ExactMatch(const SquadDataset& dataset, const PredictionSet& predictions,
                  bool allow_missing) {
  RequireTask(predictions, Task::kQa);
  std::vector<std::string> missing;
  std::size_t correct = 0;
  std::size_t total = 0;
  for (const SquadArticle& article : dataset.articles) {
    for (const SquadParagraph& paragraph : article.paragraphs) {
      for (const SquadQa& qa : paragraph.qas) {
        ++total;
        const auto it = predictions.entries.find(qa.id);
        if (it == predictions.entries.end()) {
          missing.push_back(qa.id);
          continue;
        }
        const std::string normalized = NormalizeAnswer(it->second);
        const bool hit =
            std::any_of(qa.answers.begin(), qa.answers.end(),
                        [&normalized](const SquadAnswer& answer) {
                          return NormalizeAnswer(answer.text) == normalized;
                        });
        if (hit) ++correct;
      }
    }
  }
  if (total == 0) throw ValidationError("cannot score an empty dataset");
  if (!missing.empty() && !allow_missing) ThrowMissing(missing);
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

double Reduction(double original_pct, double stressed_pct) {
  if (original_pct <= 0.0) {
    throw ValidationError("reduction needs a positive original value");
  }
  return 100.0 * (original_pct - stressed_pct) / original_pct;
}

double MajorityClass(const NliDataset& dataset) {
  if (dataset.examples.empty()) {
    throw ValidationError("majority class of an empty dataset");
  }
  std::array<std::size_t, 3> counts{};
  for (const NliExample& example : dataset.examples) {
    ++counts[Index(example.gold_label)];
  }
  const std::size_t top = *std::max_element(counts.begin(), counts.end());
  return 100.0 * static_cast<double>(top) /
         static_cast<double>(dataset.examples.size());
}

double WorstCase(const std::map<std::string, double>& results,
                 const std::optional<std::string>& self_name) {
  double worst = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& [name, value] : results) {
    if (self_name && name == *self_name) continue;
    worst = std::min(worst, value);
    any = true;
  }
  if (!any) {
    throw ValidationError("worst-case aggregation over an empty result set");
  }
  return worst;
}

std::string FormatPercent(double value) {
  // Half away from zero at one decimal; snprintf alone would tie-break to
  // even on some platforms.
  const double rounded = std::round(value * 10.0) / 10.0;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", rounded);
  return buffer;
}

namespace {

std::string CoverageText(double coverage) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", coverage);
  return buffer;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string RenderReportCsv(const EvalReport& report) {
  std::string out = "dataset,metric,value,reduction,coverage\n";
  for (const EvalRow& row : report.rows) {
    out += CsvField(row.dataset);
    out += ',';
    out += CsvField(row.metric);
    out += ',';
    out += FormatPercent(row.value);
    out += ',';
    if (row.reduction) out += FormatPercent(*row.reduction);
    out += ',';
    out += CoverageText(row.coverage);
    out += '\n';
  }
  return out;
}

std::string RenderReportText(const EvalReport& report) {
  std::size_t name_width = std::string_view("dataset").size();
  std::size_t metric_width = std::string_view("metric").size();
  for (const EvalRow& row : report.rows) {
    name_width = std::max(name_width, row.dataset.size());
    metric_width = std::max(metric_width, row.metric.size());
  }
  auto pad = [](const std::string& text, std::size_t width) {
    std::string out = text;
    out.append(width - text.size(), ' ');
    return out;
  };

  std::string out = pad("dataset", name_width) + "  " +
                    pad("metric", metric_width) + "  value   coverage\n";
  for (const EvalRow& row : report.rows) {
    out += pad(row.dataset, name_width);
    out += "  ";
    out += pad(row.metric, metric_width);
    out += "  ";
    out += pad(FormatPercent(row.value), 6);
    out += "  ";
    out += CoverageText(row.coverage);
    out += '\n';
    if (row.reduction) {
      out += pad("", name_width);
      out += "  ";
      out += pad("", metric_width);
      out += "  (";
      out += FormatPercent(*row.reduction);
      out += ")\n";
    }
  }
  return out;
}

void EmitReport(const EvalReport& report, const std::string& csv_path,
                const std::string& text_path) {
  WriteFileAtomic(csv_path, RenderReportCsv(report));
  WriteFileAtomic(text_path, RenderReportText(report));
}

}  // namespace stresskit
