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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "stresskit/corpus.h"
#include "stresskit/error.h"
#include "test_util.h"

namespace stresskit {
namespace {

NliDataset ThreeExamples() {
  NliDataset dataset;
  const char* ids[] = {"p1", "p2", "p3"};
  const NliLabel labels[] = {NliLabel::kEntailment, NliLabel::kEntailment,
                             NliLabel::kContradiction};
  for (int i = 0; i < 3; ++i) {
    NliExample example;
    example.pair_id = ids[i];
    example.premise = "Premise.";
    example.hypothesis = "Hypothesis.";
    example.gold_label = labels[i];
    dataset.examples.push_back(example);
  }
  return dataset;
}

PredictionSet NliPredictions(
    const std::map<std::string, std::string>& entries) {
  PredictionSet predictions;
  predictions.task = Task::kNli;
  predictions.entries = entries;
  return predictions;
}

TEST_CASE("nli accuracy scores matches at full precision") {
  const NliDataset dataset = ThreeExamples();
  const PredictionSet predictions = NliPredictions({
      {"p1", "entailment"},
      {"p2", "contradiction"},
      {"p3", "contradiction"},
  });
  CHECK(NliAccuracy(dataset, predictions) == 100.0 * 2.0 / 3.0);
  CHECK(FormatPercent(NliAccuracy(dataset, predictions)) == "66.7");

  const PredictionSet perfect = NliPredictions({
      {"p1", "entailment"},
      {"p2", "entailment"},
      {"p3", "contradiction"},
  });
  CHECK(NliAccuracy(dataset, perfect) == 100.0);
}

TEST_CASE("nli accuracy reports missing ids unless allowed") {
  const NliDataset dataset = ThreeExamples();
  const PredictionSet partial = NliPredictions({{"p2", "entailment"}});
  CHECK_THROWS_WITH_AS(NliAccuracy(dataset, partial),
                       "2 examples lack predictions: p1, p3", ValidationError);
  CHECK(NliAccuracy(dataset, partial, /*allow_missing=*/true) ==
        100.0 * 1.0 / 3.0);
}

TEST_CASE("nli accuracy validates task, labels, and cardinality") {
  const NliDataset dataset = ThreeExamples();
  PredictionSet qa;
  qa.task = Task::kQa;
  qa.entries = {{"p1", "whatever"}};
  CHECK_THROWS_AS(NliAccuracy(dataset, qa), ValidationError);

  const PredictionSet bad = NliPredictions({
      {"p1", "entailment"},
      {"p2", "maybe"},
      {"p3", "contradiction"},
  });
  CHECK_THROWS_AS(NliAccuracy(dataset, bad), ValidationError);

  const NliDataset empty;
  CHECK_THROWS_AS(
      NliAccuracy(empty, NliPredictions({{"p1", "entailment"}})),
      ValidationError);
}

TEST_CASE("gold and prediction labelings feed the confusion matrix") {
  const NliDataset dataset = ThreeExamples();
  const Labeling gold = GoldLabeling(dataset);
  CHECK(gold.size() == 3);
  CHECK(gold.at("p3") == NliLabel::kContradiction);

  const Labeling predicted = PredictionLabeling(NliPredictions({
      {"p1", "entailment"},
      {"p2", "neutral"},
      {"p3", "contradiction"},
      {"extra", "neutral"},
  }));
  const ConfusionMatrix matrix = Confusion(gold, predicted, "gold", "model");
  CHECK(matrix.total() == 3);  // "extra" is outside the intersection
  CHECK(matrix.count(NliLabel::kEntailment, NliLabel::kEntailment) == 1);
  CHECK(matrix.count(NliLabel::kEntailment, NliLabel::kNeutral) == 1);
  CHECK(matrix.count(NliLabel::kContradiction, NliLabel::kContradiction) == 1);
  CHECK(matrix.reference_source() == "gold");
  CHECK(matrix.prediction_source() == "model");
}

TEST_CASE("confusion matrix row rates are percentages of the row") {
  ConfusionMatrix matrix("before", "after");
  // 6 entailment rows: 3 stay, 2 -> neutral, 1 -> contradiction.
  for (int i = 0; i < 3; ++i)
    matrix.Add(NliLabel::kEntailment, NliLabel::kEntailment);
  for (int i = 0; i < 2; ++i)
    matrix.Add(NliLabel::kEntailment, NliLabel::kNeutral);
  matrix.Add(NliLabel::kEntailment, NliLabel::kContradiction);
  matrix.Add(NliLabel::kNeutral, NliLabel::kNeutral);

  CHECK(matrix.RowTotal(NliLabel::kEntailment) == 6);
  CHECK(matrix.RowRate(NliLabel::kEntailment, NliLabel::kEntailment) ==
        100.0 * 3.0 / 6.0);
  CHECK(matrix.RowRate(NliLabel::kEntailment, NliLabel::kNeutral) ==
        100.0 * 2.0 / 6.0);
  CHECK(matrix.RowRate(NliLabel::kContradiction, NliLabel::kNeutral) == 0.0);
  CHECK(matrix.total() == 7);
}

TEST_CASE("confusion over disjoint labelings is an error") {
  Labeling a;
  a["x"] = NliLabel::kEntailment;
  Labeling b;
  b["y"] = NliLabel::kEntailment;
  CHECK_THROWS_AS(Confusion(a, b), ValidationError);
}

TEST_CASE("confusion is computed over a hand-built ten-id fixture") {
  Labeling before;
  Labeling after;
  // 5 entailments: 2 stay, 3 become contradiction. 3 neutrals stay.
  // 2 contradictions: 1 stays, 1 becomes entailment.
  const struct {
    const char* id;
    NliLabel ref;
    NliLabel pred;
  } rows[] = {
      {"a", NliLabel::kEntailment, NliLabel::kEntailment},
      {"b", NliLabel::kEntailment, NliLabel::kEntailment},
      {"c", NliLabel::kEntailment, NliLabel::kContradiction},
      {"d", NliLabel::kEntailment, NliLabel::kContradiction},
      {"e", NliLabel::kEntailment, NliLabel::kContradiction},
      {"f", NliLabel::kNeutral, NliLabel::kNeutral},
      {"g", NliLabel::kNeutral, NliLabel::kNeutral},
      {"h", NliLabel::kNeutral, NliLabel::kNeutral},
      {"i", NliLabel::kContradiction, NliLabel::kContradiction},
      {"j", NliLabel::kContradiction, NliLabel::kEntailment},
  };
  for (const auto& row : rows) {
    before[row.id] = row.ref;
    after[row.id] = row.pred;
  }
  const ConfusionMatrix matrix = Confusion(before, after);
  CHECK(matrix.count(NliLabel::kEntailment, NliLabel::kContradiction) == 3);
  CHECK(matrix.RowRate(NliLabel::kEntailment, NliLabel::kContradiction) ==
        100.0 * 3.0 / 5.0);
  CHECK(matrix.RowRate(NliLabel::kContradiction, NliLabel::kEntailment) ==
        50.0);
  CHECK(matrix.RowTotal(NliLabel::kNeutral) == 3);
  CHECK(matrix.total() == 10);
}

TEST_CASE("normalize answer lowercases, strips punctuation and articles") {
  CHECK(NormalizeAnswer("The cat.") == "cat");
  CHECK(NormalizeAnswer("John Elway") == "john elway");
  CHECK(NormalizeAnswer("  A  An THE dog ") == "dog");
  CHECK(NormalizeAnswer("U.S. Grant") == "us grant");
  CHECK(NormalizeAnswer("an") == "");
  CHECK(NormalizeAnswer("") == "");
  CHECK(NormalizeAnswer("thread") == "thread");  // articles only as tokens
  CHECK(NormalizeAnswer("38") == "38");
  CHECK(NormalizeAnswer("Göthe's house") == "göthes house");
  CHECK(NormalizeAnswer("a\tb\nc") == "b c");
}

SquadDataset QaFixture() {
  SquadDataset dataset;
  dataset.version = "1.1";
  SquadArticle article;
  article.title = "Fixture";
  SquadParagraph paragraph;
  paragraph.context =
      "John Elway was the winning quarterback. The game score was 38 to 24.";
  SquadQa first;
  first.id = "qa1";
  first.question = "Who won?";
  first.answers.push_back({"John Elway", 0});
  first.answers.push_back({"Elway", 5});
  SquadQa second;
  second.id = "qa2";
  second.question = "What was the score?";
  second.answers.push_back({"38 to 24", 59});
  paragraph.qas = {first, second};
  article.paragraphs.push_back(paragraph);
  dataset.articles.push_back(article);
  return dataset;
}

PredictionSet QaPredictions(const std::map<std::string, std::string>& entries) {
  PredictionSet predictions;
  predictions.task = Task::kQa;
  predictions.entries = entries;
  return predictions;
}

TEST_CASE("exact match accepts any gold answer after normalization") {
  const SquadDataset dataset = QaFixture();
  CHECK(ExactMatch(dataset, QaPredictions({{"qa1", "John Elway"},
                                           {"qa2", "38 to 24"}})) == 100.0);
  // Casing, articles, punctuation, and extra spaces do not matter.
  CHECK(ExactMatch(dataset, QaPredictions({{"qa1", "the  ELWAY."},
                                           {"qa2", "38 to 24"}})) == 100.0);
  // The distracting-but-wrong name scores zero.
  CHECK(ExactMatch(dataset, QaPredictions({{"qa1", "Jeff Dean"},
                                           {"qa2", "37 to 24"}})) == 0.0);
  CHECK(ExactMatch(dataset, QaPredictions({{"qa1", "Jeff Dean"},
                                           {"qa2", "38 to 24"}})) == 50.0);
}

TEST_CASE("exact match validates coverage and task") {
  const SquadDataset dataset = QaFixture();
  CHECK_THROWS_WITH_AS(ExactMatch(dataset, QaPredictions({{"qa1", "x"}})),
                       "1 examples lack predictions: qa2", ValidationError);
  CHECK(ExactMatch(dataset, QaPredictions({{"qa1", "Elway"}}),
                   /*allow_missing=*/true) == 50.0);
  PredictionSet nli;
  nli.task = Task::kNli;
  CHECK_THROWS_AS(ExactMatch(dataset, nli), ValidationError);
  CHECK_THROWS_AS(ExactMatch(SquadDataset{}, QaPredictions({})),
                  ValidationError);
}

TEST_CASE("reduction is the relative drop in percent") {
  CHECK(FormatPercent(Reduction(86.0, 61.2)) == "28.8");
  CHECK(FormatPercent(Reduction(60.8, 17.8)) == "70.7");
  CHECK(Reduction(50.0, 50.0) == 0.0);
  CHECK(Reduction(50.0, 75.0) == -50.0);
  CHECK(Reduction(80.0, 0.0) == 100.0);
  CHECK_THROWS_AS(Reduction(0.0, 10.0), ValidationError);
  CHECK_THROWS_AS(Reduction(-5.0, 1.0), ValidationError);
}

TEST_CASE("majority class follows the most frequent gold label") {
  CHECK(MajorityClass(ThreeExamples()) == 100.0 * 2.0 / 3.0);
  CHECK(FormatPercent(MajorityClass(ThreeExamples())) == "66.7");

  NliDataset skewed = ThreeExamples();
  skewed.examples[2].gold_label = NliLabel::kEntailment;
  CHECK(MajorityClass(skewed) == 100.0);
  CHECK_THROWS_AS(MajorityClass(NliDataset{}), ValidationError);
}

TEST_CASE("worst case takes the minimum, excluding self") {
  const std::map<std::string, double> results = {{"A", 10.0}, {"B", 20.0}};
  CHECK(WorstCase(results) == 10.0);
  CHECK(WorstCase(results, std::optional<std::string>("A")) == 20.0);
  CHECK(WorstCase(results, std::optional<std::string>("C")) == 10.0);
  CHECK_THROWS_AS(WorstCase({}, std::nullopt), ValidationError);
  CHECK_THROWS_AS(
      WorstCase({{"A", 1.0}}, std::optional<std::string>("A")),
      ValidationError);
}

TEST_CASE("format percent rounds half away from zero") {
  CHECK(FormatPercent(66.66666) == "66.7");
  CHECK(FormatPercent(0.25) == "0.3");
  CHECK(FormatPercent(0.349999) == "0.3");
  CHECK(FormatPercent(28.85) == "28.9");
  CHECK(FormatPercent(-0.25) == "-0.3");
  CHECK(FormatPercent(100.0) == "100.0");
  CHECK(FormatPercent(0.0) == "0.0");
}

EvalReport FixtureReport() {
  EvalReport report;
  EvalRow original;
  original.dataset = "dev";
  original.metric = "accuracy";
  original.value = 86.0;
  report.rows.push_back(original);

  EvalRow stressed;
  stressed.dataset = "word_overlap";
  stressed.metric = "accuracy";
  stressed.value = 61.2;
  stressed.reduction = Reduction(86.0, 61.2);
  stressed.coverage = 0.998;
  report.rows.push_back(stressed);
  return report;
}

TEST_CASE("csv report render is stable and quoted") {
  CHECK(RenderReportCsv(FixtureReport()) ==
        "dataset,metric,value,reduction,coverage\n"
        "dev,accuracy,86.0,,1.000\n"
        "word_overlap,accuracy,61.2,28.8,0.998\n");

  EvalReport tricky;
  EvalRow row;
  row.dataset = "a,b \"c\"";
  row.metric = "exact_match";
  row.value = 50.0;
  tricky.rows.push_back(row);
  CHECK(RenderReportCsv(tricky) ==
        "dataset,metric,value,reduction,coverage\n"
        "\"a,b \"\"c\"\"\",exact_match,50.0,,1.000\n");
}

TEST_CASE("text report render aligns and brackets reductions") {
  CHECK(RenderReportText(FixtureReport()) ==
        "dataset       metric    value   coverage\n"
        "dev           accuracy  86.0    1.000\n"
        "word_overlap  accuracy  61.2    0.998\n"
        "                        (28.8)\n");
}

TEST_CASE("emit report writes both renderings") {
  TempDir dir;
  const std::string csv = dir.Path("report.csv");
  const std::string text = dir.Path("report.txt");
  EmitReport(FixtureReport(), csv, text);
  CHECK(ReadWholeFile(csv) == RenderReportCsv(FixtureReport()));
  CHECK(ReadWholeFile(text) == RenderReportText(FixtureReport()));
}

}  // namespace
}  // namespace stresskit
