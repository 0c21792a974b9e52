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

#include "stresskit/nli_stress.h"

#include <cstddef>

#include "stresskit/error.h"
#include "stresskit/keyboard.h"
#include "stresskit/text.h"
#include "stresskit/unicode.h"

namespace stresskit {
namespace {

// '.', '!', '?' are ASCII, so byte-level inspection is safe on UTF-8 text.
bool EndsInTerminalPunctuation(const std::string& sentence) {
  if (sentence.empty()) return false;
  const char last = sentence.back();
  return last == '.' || last == '!' || last == '?';
}

std::string& TargetSentence(NliExample& example, TautologyTarget target) {
  return target == TautologyTarget::kPremise ? example.premise
                                             : example.hypothesis;
}

// Pair indices i where word[i] != word[i+1]; swapping any other pair is a
// no-op on the string value.
std::vector<std::size_t> DifferingPairs(std::u32string_view word) {
  std::vector<std::size_t> pairs;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] != word[i + 1]) pairs.push_back(i);
  }
  return pairs;
}

std::vector<std::size_t> KeyboardEligiblePositions(std::u32string_view word) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!KeyboardNeighbors(word[i]).empty()) positions.push_back(i);
  }
  return positions;
}

}  // namespace

NliExample AddTautology(const NliExample& example, const TautologySpec& spec) {
  if (spec.n < 1) {
    throw ValidationError("tautology repetition count must be >= 1, got " +
                          std::to_string(spec.n));
  }
  const std::string_view phrase = spec.phrase == TautologyPhrase::kAffirmative
                                      ? kAffirmativeTautology
                                      : kNegatedTautology;
  std::string block;
  block.reserve(phrase.size() * static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) block += phrase;

  NliExample out = example;
  std::string& sentence = TargetSentence(out, spec.target);
  if (EndsInTerminalPunctuation(sentence)) {
    sentence.insert(sentence.size() - 1, block);
  } else {
    sentence += block;
  }
  return out;
}

NliExample WordOverlap(const NliExample& example) {
  return AddTautology(example, {TautologyTarget::kHypothesis, 1,
                                TautologyPhrase::kAffirmative});
}

NliExample NegationDistraction(const NliExample& example) {
  return AddTautology(
      example, {TautologyTarget::kHypothesis, 1, TautologyPhrase::kNegated});
}

NliExample LengthMismatch(const NliExample& example) {
  return AddTautology(
      example, {TautologyTarget::kPremise, 5, TautologyPhrase::kAffirmative});
}

SpellingOutcome SpellingError(const NliExample& example, RngStream& rng,
                              SpellingMode mode) {
  SpellingOutcome outcome;
  outcome.example = example;

  SpellingMode op = mode;
  if (mode == SpellingMode::kMixed) {
    op = rng.Below(2) == 0 ? SpellingMode::kSwap : SpellingMode::kKeyboard;
  }

  std::u32string hypothesis = DecodeUtf8(example.hypothesis);
  const std::vector<WordSpan> words = TokenizeWords(hypothesis);

  // A word is eligible when the drawn operation can visibly change it.
  std::vector<std::size_t> eligible;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::u32string_view word(hypothesis.data() + words[w].begin,
                                   words[w].length());
    const bool ok = op == SpellingMode::kSwap
                        ? !DifferingPairs(word).empty()
                        : !KeyboardEligiblePositions(word).empty();
    if (ok) eligible.push_back(w);
  }
  if (eligible.empty()) {
    outcome.reason = op == SpellingMode::kSwap
                         ? "no word with a differing adjacent pair"
                         : "no character with keyboard neighbors";
    return outcome;
  }

  const WordSpan span = words[eligible[rng.Below(eligible.size())]];
  const std::u32string_view word(hypothesis.data() + span.begin,
                                 span.length());
  if (op == SpellingMode::kSwap) {
    const std::vector<std::size_t> pairs = DifferingPairs(word);
    const std::size_t i = span.begin + pairs[rng.Below(pairs.size())];
    std::swap(hypothesis[i], hypothesis[i + 1]);
  } else {
    const std::vector<std::size_t> positions = KeyboardEligiblePositions(word);
    const std::size_t i = span.begin + positions[rng.Below(positions.size())];
    const std::u32string neighbors = KeyboardNeighbors(hypothesis[i]);
    hypothesis[i] = neighbors[rng.Below(neighbors.size())];
  }

  outcome.example.hypothesis = EncodeUtf8(hypothesis);
  outcome.changed = true;
  return outcome;
}

NliExample AblatePremise(const NliExample& example) {
  NliExample out = example;
  out.premise.clear();
  return out;
}

std::string SwapAdjacent(std::string_view word, std::size_t pair_index) {
  std::u32string chars = DecodeUtf8(word);
  if (pair_index + 1 >= chars.size()) {
    throw ValidationError("swap pair index " + std::to_string(pair_index) +
                          " out of range for a " +
                          std::to_string(chars.size()) + "-character word");
  }
  std::swap(chars[pair_index], chars[pair_index + 1]);
  return EncodeUtf8(chars);
}

std::string ReplaceWithNeighbor(std::string_view word, std::size_t position,
                                std::size_t neighbor_index) {
  std::u32string chars = DecodeUtf8(word);
  if (position >= chars.size()) {
    throw ValidationError("position " + std::to_string(position) +
                          " out of range for a " +
                          std::to_string(chars.size()) + "-character word");
  }
  const std::u32string neighbors = KeyboardNeighbors(chars[position]);
  if (neighbor_index >= neighbors.size()) {
    throw ValidationError("neighbor index " + std::to_string(neighbor_index) +
                          " out of range: character has " +
                          std::to_string(neighbors.size()) + " neighbors");
  }
  chars[position] = neighbors[neighbor_index];
  return EncodeUtf8(chars);
}

StressSuite BuildStressSuite(const NliDataset& dataset,
                             const StressSuiteConfig& config) {
  if (config.sweep_n < 0) {
    throw ValidationError("sweep_n must be >= 0");
  }
  StressSuite suite;
  suite.tautology_hypothesis.resize(static_cast<std::size_t>(config.sweep_n));
  suite.tautology_premise.resize(static_cast<std::size_t>(config.sweep_n));

  for (const NliExample& example : dataset.examples) {
    suite.word_overlap.examples.push_back(WordOverlap(example));
    suite.negation.examples.push_back(NegationDistraction(example));
    suite.length_mismatch.examples.push_back(LengthMismatch(example));
    suite.premise_ablated.examples.push_back(AblatePremise(example));

    RngStream rng = DeriveRng(config.global_seed, example.pair_id, "spell");
    SpellingOutcome outcome = SpellingError(example, rng, config.spelling_mode);
    if (!outcome.changed) ++suite.spelling_noops;
    suite.spelling_error.examples.push_back(std::move(outcome.example));

    for (int n = 1; n <= config.sweep_n; ++n) {
      suite.tautology_hypothesis[static_cast<std::size_t>(n - 1)]
          .examples.push_back(AddTautology(
              example, {TautologyTarget::kHypothesis, n,
                        TautologyPhrase::kAffirmative}));
      suite.tautology_premise[static_cast<std::size_t>(n - 1)]
          .examples.push_back(
              AddTautology(example, {TautologyTarget::kPremise, n,
                                     TautologyPhrase::kAffirmative}));
    }
  }
  return suite;
}

}  // namespace stresskit
