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

#ifndef STRESSKIT_ADVERSARY_H_
#define STRESSKIT_ADVERSARY_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stresskit/corpus.h"

namespace stresskit {

// Black-box scorer for the greedy search. Higher means the model is more
// confident in the correct answer; the search minimizes it. Implementations
// must be pure within one run: same inputs, same score.
class ConfidenceOracle {
 public:
  virtual ~ConfidenceOracle() = default;
  virtual double Score(const std::string& context, const std::string& question,
                       const std::vector<std::string>& gold_answers) = 0;
};

// Test oracle: score = (positions of the appended sentence differing from a
// planted target) / target size. Reaches 0 exactly when the search recovers
// the target.
class PlantedSentenceOracle : public ConfidenceOracle {
 public:
  PlantedSentenceOracle(std::string base_context,
                        std::vector<std::string> target_words);
  double Score(const std::string& context, const std::string& question,
               const std::vector<std::string>& gold_answers) override;

 private:
  std::string base_context_;
  std::vector<std::string> target_words_;
};

// Oracle backed by precomputed scores: a JSON object
//   { "<qa id>": { "<16-hex fnv1a of sentence>": score, ...,
//                  "default": score? }, "default": score? }
// bound to one qa and its original context. The appended sentence is
// recovered by stripping the context prefix; a sentence with no entry falls
// back to the qa-level then file-level "default", and throws Error when
// neither exists (the search reports this as an abort).
class FileOracle : public ConfidenceOracle {
 public:
  FileOracle(const std::string& path, std::string qa_id,
             std::string base_context);
  double Score(const std::string& context, const std::string& question,
               const std::vector<std::string>& gold_answers) override;

 private:
  std::string qa_id_;
  std::string base_context_;
  std::map<std::string, double> scores_;  // hash or "default" -> score
  bool has_file_default_ = false;
  double file_default_ = 0.0;
};

// Sentence appended with AppendSentence, recovered from the full context.
// Throws ValidationError when `context` does not extend `base`.
std::string ExtractAppendedSentence(const std::string& base,
                                    const std::string& context);

// New context = old context + " " + sentence (no space when the old context
// is empty). Existing characters, answers, and qa ids are untouched.
SquadParagraph AppendSentence(const SquadParagraph& paragraph,
                              std::string_view sentence);

enum class AdversaryMode { kAddAny, kAddCommon };

struct AddAnyConfig {
  int d = 10;       // words per adversarial sentence
  int epochs = 6;   // full passes over the d positions
  int k = 20;       // candidates drawn per position visit
  AdversaryMode mode = AdversaryMode::kAddAny;
  std::vector<std::string> common_words;
  std::uint64_t global_seed = 0;
};

// One position visit: the k candidates in evaluation order, their scores,
// and the word occupying the position afterwards.
struct TraceStep {
  int epoch = 0;
  int position = 0;
  std::vector<std::string> candidates;
  std::vector<double> scores;
  std::string chosen;
  double score_after = 0.0;
};

struct SearchTrace {
  std::string initial_sentence;
  double initial_score = 0.0;
  std::vector<TraceStep> steps;
  std::size_t oracle_calls = 0;
};

// What the search needs to know about one question. Determinism is keyed on
// qa_id: the rng derives from (global_seed, qa_id, "addany").
struct QaTask {
  std::string qa_id;
  std::string question;
  std::string context;
  std::vector<std::string> gold_answers;
};

struct AddAnyResult {
  std::string sentence;
  double score = 0.0;
  SearchTrace trace;
  std::string aborted;  // nonempty when the oracle failed mid-search
};

// Greedy word-by-word minimization of the oracle score. Starts from d
// uniform draws over common_words; each epoch revisits every position,
// draws k candidates (common_words plus question words for kAddAny,
// common_words alone for kAddCommon), and keeps the best strictly-improving
// substitution, first-evaluated winning ties. Oracle exceptions abort the
// search with the partial trace preserved.
AddAnyResult AddAnySearch(const QaTask& task, ConfidenceOracle& oracle,
                          const AddAnyConfig& config);

// Re-runs every context in `trace` against `oracle` and returns whether all
// scores match exactly. Exercises the trace-completeness invariant.
bool ReplayTrace(const QaTask& task, ConfidenceOracle& oracle,
                 const SearchTrace& trace);

// qa id -> adversarial sentences to append (usually one; several model a
// multi-candidate adversary file).
using SentenceMap = std::map<std::string, std::vector<std::string>>;

// Appends each mapped sentence to its qa's paragraph. A paragraph is
// duplicated once per distinct sentence it hosts; qas sharing a sentence
// share the copy. Unkeyed qas stay on the original paragraph, unchanged.
// Adversarial qa copies get ids suffixed "-adv", then "-adv2", ... (the
// number bumps past any id already taken). Unknown qa ids are an error.
SquadDataset BuildAdversarialDataset(const SquadDataset& dataset,
                                     const SentenceMap& sentences);

}  // namespace stresskit

#endif  // STRESSKIT_ADVERSARY_H_
