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

#ifndef STRESSKIT_CORPUS_H_
#define STRESSKIT_CORPUS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stresskit {

// ---------------------------------------------------------------------------
// NLI
// ---------------------------------------------------------------------------

enum class NliLabel { kEntailment, kNeutral, kContradiction };

// MultiNLI dev partitions: whether the example's genre appears in training.
enum class NliPartition { kMatched, kMismatched, kUnknown };

std::string_view ToString(NliLabel label);
std::string_view ToString(NliPartition partition);

// Parses "entailment" / "neutral" / "contradiction"; nullopt otherwise.
std::optional<NliLabel> ParseNliLabel(std::string_view text);

struct NliExample {
  std::string pair_id;
  std::string premise;
  std::string hypothesis;
  NliLabel gold_label = NliLabel::kEntailment;
  std::string genre;
  NliPartition partition = NliPartition::kUnknown;

  bool operator==(const NliExample&) const = default;
};

struct NliDataset {
  std::vector<NliExample> examples;
  // Rows whose raw gold_label was "-" (annotator disagreement); dropped at
  // load time, never guessed.
  std::size_t dropped_unlabeled = 0;

  bool operator==(const NliDataset&) const = default;
};

// ---------------------------------------------------------------------------
// SQuAD
// ---------------------------------------------------------------------------

// answer_start counts Unicode scalar values into the paragraph context,
// 0-based, and context.substr(answer_start, len(text)) must equal text.
struct SquadAnswer {
  std::string text;
  std::size_t answer_start = 0;

  bool operator==(const SquadAnswer&) const = default;
};

struct SquadQa {
  std::string id;
  std::string question;
  std::vector<SquadAnswer> answers;  // nonempty

  bool operator==(const SquadQa&) const = default;
};

struct SquadParagraph {
  std::string context;
  std::vector<SquadQa> qas;

  bool operator==(const SquadParagraph&) const = default;
};

struct SquadArticle {
  std::string title;
  std::vector<SquadParagraph> paragraphs;

  bool operator==(const SquadArticle&) const = default;
};

struct SquadDataset {
  std::string version;
  std::vector<SquadArticle> articles;

  bool operator==(const SquadDataset&) const = default;
};

// ---------------------------------------------------------------------------
// Noise lexicon and model predictions
// ---------------------------------------------------------------------------

// Word -> observed real-world misspellings. Keys and variants are stored
// lowercase; no variant equals its key; variant order is first-seen.
struct NoiseLexicon {
  std::map<std::string, std::vector<std::string>> entries;

  // Lookup by lowercased word; nullptr when absent.
  const std::vector<std::string>* Find(const std::string& lowercase_word) const;
};

enum class Task { kNli, kQa };

std::string_view ToString(Task task);

// Model outputs keyed by example id: a class label for NLI, an answer string
// for QA. NLI labels are validated at load time.
struct PredictionSet {
  Task task = Task::kNli;
  std::map<std::string, std::string> entries;
};

}  // namespace stresskit

#endif  // STRESSKIT_CORPUS_H_
