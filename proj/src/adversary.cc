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

#include "stresskit/adversary.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "stresskit/error.h"
#include "stresskit/rng.h"
#include "stresskit/text.h"

namespace stresskit {
namespace {

using Json = nlohmann::ordered_json;

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> SplitWords(const std::string& sentence) {
  std::vector<std::string> words;
  std::istringstream in(sentence);
  std::string word;
  while (in >> word) words.push_back(std::move(word));
  return words;
}

std::string HashKey(const std::string& sentence) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(sentence)));
  return buffer;
}

void ValidateConfig(const AddAnyConfig& config) {
  if (config.d < 1) throw ValidationError("adversary: d must be >= 1");
  if (config.epochs < 0) throw ValidationError("adversary: epochs must be >= 0");
  if (config.k < 1) throw ValidationError("adversary: k must be >= 1");
  if (config.common_words.empty()) {
    throw ValidationError("adversary: common-word list is empty");
  }
}

std::string WithSentence(const std::string& context,
                         const std::string& sentence) {
  if (context.empty()) return sentence;
  return context + " " + sentence;
}

}  // namespace

PlantedSentenceOracle::PlantedSentenceOracle(
    std::string base_context, std::vector<std::string> target_words)
    : base_context_(std::move(base_context)),
      target_words_(std::move(target_words)) {
  if (target_words_.empty()) {
    throw ValidationError("planted oracle: target sentence is empty");
  }
}

double PlantedSentenceOracle::Score(const std::string& context,
                                    const std::string& /*question*/,
                                    const std::vector<std::string>& /*gold*/) {
  const std::vector<std::string> words =
      SplitWords(ExtractAppendedSentence(base_context_, context));
  std::size_t mismatches = 0;
  const std::size_t longer = std::max(words.size(), target_words_.size());
  for (std::size_t i = 0; i < longer; ++i) {
    if (i >= words.size() || i >= target_words_.size() ||
        words[i] != target_words_[i]) {
      ++mismatches;
    }
  }
  return static_cast<double>(mismatches) /
         static_cast<double>(target_words_.size());
}

FileOracle::FileOracle(const std::string& path, std::string qa_id,
                       std::string base_context)
    : qa_id_(std::move(qa_id)), base_context_(std::move(base_context)) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(path + ": root is not an object");
  if (root.contains("default") && root["default"].is_number()) {
    has_file_default_ = true;
    file_default_ = root["default"].get<double>();
  }
  const auto it = root.find(qa_id_);
  if (it != root.end()) {
    if (!it->is_object()) {
      throw ParseError(path + ": entry for qa " + qa_id_ + " is not an object");
    }
    for (const auto& [key, value] : it->items()) {
      if (!value.is_number()) {
        throw ParseError(path + ": non-numeric score for qa " + qa_id_);
      }
      scores_[key] = value.get<double>();
    }
  }
}

double FileOracle::Score(const std::string& context,
                         const std::string& /*question*/,
                         const std::vector<std::string>& /*gold*/) {
  const std::string sentence = ExtractAppendedSentence(base_context_, context);
  auto it = scores_.find(HashKey(sentence));
  if (it != scores_.end()) return it->second;
  it = scores_.find("default");
  if (it != scores_.end()) return it->second;
  if (has_file_default_) return file_default_;
  throw Error("file oracle: no score for qa " + qa_id_ + ", sentence \"" +
              sentence + "\"");
}

std::string ExtractAppendedSentence(const std::string& base,
                                    const std::string& context) {
  if (context == base) return "";
  if (base.empty()) return context;
  if (context.size() <= base.size() + 1 ||
      context.compare(0, base.size(), base) != 0 ||
      context[base.size()] != ' ') {
    throw ValidationError("context does not extend the expected paragraph");
  }
  return context.substr(base.size() + 1);
}

SquadParagraph AppendSentence(const SquadParagraph& paragraph,
                              std::string_view sentence) {
  if (sentence.empty()) {
    throw ValidationError("cannot append an empty sentence");
  }
  SquadParagraph out = paragraph;
  out.context = WithSentence(paragraph.context, std::string(sentence));
  return out;
}

AddAnyResult AddAnySearch(const QaTask& task, ConfidenceOracle& oracle,
                          const AddAnyConfig& config) {
  ValidateConfig(config);
  if (task.qa_id.empty()) throw ValidationError("adversary: empty qa id");

  RngStream rng = DeriveRng(config.global_seed, task.qa_id, "addany");

  // Candidate pool: the common words, deduplicated in order, plus (for
  // AddAny) the question's words that are not already present.
  std::vector<std::string> pool;
  std::unordered_set<std::string> in_pool;
  for (const std::string& word : config.common_words) {
    if (in_pool.insert(word).second) pool.push_back(word);
  }
  if (config.mode == AdversaryMode::kAddAny) {
    for (const std::string& word : TokenizeWordsUtf8(task.question)) {
      if (in_pool.insert(word).second) pool.push_back(word);
    }
  }

  std::vector<std::string> words(static_cast<std::size_t>(config.d));
  for (std::string& word : words) {
    word = config.common_words[rng.Below(config.common_words.size())];
  }

  AddAnyResult result;
  SearchTrace& trace = result.trace;
  trace.initial_sentence = Join(words);

  auto finish = [&](double score) {
    result.sentence = Join(words);
    result.score = score;
    return result;
  };

  double incumbent;
  try {
    incumbent = oracle.Score(WithSentence(task.context, trace.initial_sentence),
                             task.question, task.gold_answers);
    ++trace.oracle_calls;
  } catch (const std::exception& e) {
    result.aborted = e.what();
    return finish(0.0);
  }
  trace.initial_score = incumbent;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (int pos = 0; pos < config.d; ++pos) {
      TraceStep step;
      step.epoch = epoch;
      step.position = pos;

      double best = incumbent;
      int best_index = -1;
      for (int j = 0; j < config.k; ++j) {
        const std::string& candidate = pool[rng.Below(pool.size())];
        std::vector<std::string> trial = words;
        trial[static_cast<std::size_t>(pos)] = candidate;
        double score;
        try {
          score = oracle.Score(WithSentence(task.context, Join(trial)),
                               task.question, task.gold_answers);
          ++trace.oracle_calls;
        } catch (const std::exception& e) {
          step.chosen = words[static_cast<std::size_t>(pos)];
          step.score_after = incumbent;
          trace.steps.push_back(std::move(step));
          result.aborted = e.what();
          return finish(incumbent);
        }
        step.candidates.push_back(candidate);
        step.scores.push_back(score);
        if (score < best) {  // strict improvement; ties keep the earlier
          best = score;
          best_index = j;
        }
      }
      if (best_index >= 0) {
        words[static_cast<std::size_t>(pos)] =
            step.candidates[static_cast<std::size_t>(best_index)];
        incumbent = best;
      }
      step.chosen = words[static_cast<std::size_t>(pos)];
      step.score_after = incumbent;
      trace.steps.push_back(std::move(step));
    }
  }
  return finish(incumbent);
}

bool ReplayTrace(const QaTask& task, ConfidenceOracle& oracle,
                 const SearchTrace& trace) {
  try {
    std::vector<std::string> words = SplitWords(trace.initial_sentence);
    if (oracle.Score(WithSentence(task.context, trace.initial_sentence),
                     task.question,
                     task.gold_answers) != trace.initial_score) {
      return false;
    }
    double incumbent = trace.initial_score;
    for (const TraceStep& step : trace.steps) {
      if (step.candidates.size() != step.scores.size()) return false;
      const std::size_t pos = static_cast<std::size_t>(step.position);
      if (pos >= words.size()) return false;
      // score_after must be the accepted candidate's recorded score, or the
      // prior incumbent when the position kept its word.
      double expected = incumbent;
      if (step.chosen != words[pos]) {
        const auto it = std::find(step.candidates.begin(),
                                  step.candidates.end(), step.chosen);
        if (it == step.candidates.end()) return false;
        expected = step.scores[static_cast<std::size_t>(
            it - step.candidates.begin())];
      }
      for (std::size_t j = 0; j < step.candidates.size(); ++j) {
        std::vector<std::string> trial = words;
        trial[pos] = step.candidates[j];
        if (oracle.Score(WithSentence(task.context, Join(trial)),
                         task.question,
                         task.gold_answers) != step.scores[j]) {
          return false;
        }
      }
      if (step.score_after != expected) return false;
      words[pos] = step.chosen;
      incumbent = step.score_after;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

SquadDataset BuildAdversarialDataset(const SquadDataset& dataset,
                                     const SentenceMap& sentences) {
  std::unordered_set<std::string> known_ids;
  for (const SquadArticle& article : dataset.articles) {
    for (const SquadParagraph& paragraph : article.paragraphs) {
      for (const SquadQa& qa : paragraph.qas) known_ids.insert(qa.id);
    }
  }
  std::string missing;
  for (const auto& [qa_id, _] : sentences) {
    if (!known_ids.count(qa_id)) {
      if (!missing.empty()) missing += ", ";
      missing += qa_id;
    }
  }
  if (!missing.empty()) {
    throw ValidationError("unknown qa ids in sentence map: " + missing);
  }

  std::unordered_set<std::string> used_ids = known_ids;
  auto adversarial_id = [&used_ids](const std::string& base) {
    std::string candidate = base + "-adv";
    for (int n = 2; !used_ids.insert(candidate).second; ++n) {
      candidate = base + "-adv" + std::to_string(n);
    }
    return candidate;
  };

  SquadDataset out;
  out.version = dataset.version;
  for (const SquadArticle& article : dataset.articles) {
    SquadArticle out_article;
    out_article.title = article.title;
    for (const SquadParagraph& paragraph : article.paragraphs) {
      // Group keyed qas by sentence, in order of first appearance.
      std::vector<std::pair<std::string, std::vector<const SquadQa*>>> groups;
      std::vector<const SquadQa*> unkeyed;
      for (const SquadQa& qa : paragraph.qas) {
        const auto it = sentences.find(qa.id);
        if (it == sentences.end()) {
          unkeyed.push_back(&qa);
          continue;
        }
        for (const std::string& sentence : it->second) {
          auto group = std::find_if(
              groups.begin(), groups.end(),
              [&](const auto& g) { return g.first == sentence; });
          if (group == groups.end()) {
            groups.push_back({sentence, {}});
            group = std::prev(groups.end());
          }
          group->second.push_back(&qa);
        }
      }

      if (groups.empty()) {
        out_article.paragraphs.push_back(paragraph);
        continue;
      }
      if (!unkeyed.empty()) {
        SquadParagraph base;
        base.context = paragraph.context;
        for (const SquadQa* qa : unkeyed) base.qas.push_back(*qa);
        out_article.paragraphs.push_back(std::move(base));
      }
      for (const auto& [sentence, qas] : groups) {
        SquadParagraph adv = AppendSentence(paragraph, sentence);
        adv.qas.clear();
        for (const SquadQa* qa : qas) {
          SquadQa copy = *qa;
          copy.id = adversarial_id(qa->id);
          adv.qas.push_back(std::move(copy));
        }
        out_article.paragraphs.push_back(std::move(adv));
      }
    }
    out.articles.push_back(std::move(out_article));
  }
  return out;
}

}  // namespace stresskit
