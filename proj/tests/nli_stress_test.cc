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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "stresskit/corpus.h"
#include "stresskit/error.h"
#include "stresskit/keyboard.h"
#include "stresskit/rng.h"
#include "stresskit/text.h"
#include "stresskit/unicode.h"

namespace stresskit {
namespace {

NliExample Fixture() {
  NliExample example;
  example.pair_id = "fixture-1";
  example.premise = "Then he ran.";
  example.hypothesis = "He ran like an athlete.";
  example.gold_label = NliLabel::kEntailment;
  example.genre = "fiction";
  example.partition = NliPartition::kMatched;
  return example;
}

void CheckMetadataPreserved(const NliExample& before, const NliExample& after) {
  CHECK(after.pair_id == before.pair_id);
  CHECK(after.gold_label == before.gold_label);
  CHECK(after.genre == before.genre);
  CHECK(after.partition == before.partition);
}

TEST_CASE("word overlap appends the affirmative tautology inside the period") {
  const NliExample out = WordOverlap(Fixture());
  CHECK(out.hypothesis == "He ran like an athlete and true is true.");
  CHECK(out.premise == "Then he ran.");
  CheckMetadataPreserved(Fixture(), out);
}

TEST_CASE("negation appends the negated tautology inside the period") {
  const NliExample out = NegationDistraction(Fixture());
  CHECK(out.hypothesis == "He ran like an athlete and false is not true.");
  CHECK(out.premise == "Then he ran.");
}

TEST_CASE("length mismatch repeats the tautology five times on the premise") {
  const NliExample out = LengthMismatch(Fixture());
  CHECK(out.premise ==
        "Then he ran and true is true and true is true and true is true and "
        "true is true and true is true.");
  CHECK(out.hypothesis == "He ran like an athlete.");
}

TEST_CASE("tautology placement handles '!' and '?' and bare sentences") {
  NliExample example = Fixture();

  example.hypothesis = "He ran!";
  CHECK(WordOverlap(example).hypothesis == "He ran and true is true!");

  example.hypothesis = "Did he run?";
  CHECK(WordOverlap(example).hypothesis == "Did he run and true is true?");

  example.hypothesis = "He ran";
  CHECK(WordOverlap(example).hypothesis == "He ran and true is true");

  example.hypothesis = "";
  CHECK(WordOverlap(example).hypothesis == " and true is true");
}

TEST_CASE("tautology repetition count is honored and validated") {
  NliExample example = Fixture();
  example.hypothesis = "Fine.";

  TautologySpec spec;
  spec.target = TautologyTarget::kHypothesis;
  spec.phrase = TautologyPhrase::kAffirmative;
  spec.n = 3;
  CHECK(AddTautology(example, spec).hypothesis ==
        "Fine and true is true and true is true and true is true.");

  spec.n = 0;
  CHECK_THROWS_AS(AddTautology(example, spec), ValidationError);
  spec.n = -2;
  CHECK_THROWS_AS(AddTautology(example, spec), ValidationError);
}

TEST_CASE("tautologies compose left to right") {
  const NliExample out = NegationDistraction(WordOverlap(Fixture()));
  CHECK(out.hypothesis ==
        "He ran like an athlete and true is true and false is not true.");
}

TEST_CASE("premise ablation empties the premise and is idempotent") {
  const NliExample once = AblatePremise(Fixture());
  CHECK(once.premise.empty());
  CHECK(once.hypothesis == Fixture().hypothesis);
  CHECK(AblatePremise(once) == once);
  CheckMetadataPreserved(Fixture(), once);
}

TEST_CASE("swap-adjacent edit core on concrete words") {
  CHECK(SwapAdjacent("athlete", 5) == "athleet");
  CHECK(SwapAdjacent("he", 0) == "eh");
  CHECK(SwapAdjacent("abc", 1) == "acb");
  CHECK_THROWS_AS(SwapAdjacent("ab", 1), ValidationError);
  CHECK_THROWS_AS(SwapAdjacent("x", 0), ValidationError);
}

TEST_CASE("keyboard-neighbor edit core on concrete words") {
  // Neighbors of 'e' in sorted order are d, r, s, w.
  CHECK(ReplaceWithNeighbor("expression", 4, 3) == "exprwssion");
  CHECK(ReplaceWithNeighbor("expression", 4, 0) == "exprdssion");
  CHECK_THROWS_AS(ReplaceWithNeighbor("expression", 99, 0), ValidationError);
  CHECK_THROWS_AS(ReplaceWithNeighbor("expression", 4, 4), ValidationError);
}

TEST_CASE("pinned swap spelling error reproduces the athlete typo") {
  // Seed 17 draws word 4 of 5 ("athlete") and pair 5 of 6 (the final "te").
  RngStream rng(17);
  const SpellingOutcome out =
      SpellingError(Fixture(), rng, SpellingMode::kSwap);
  CHECK(out.changed);
  CHECK(out.example.hypothesis == "He ran like an athleet.");
  CHECK(out.example.premise == Fixture().premise);
  CheckMetadataPreserved(Fixture(), out.example);
}

TEST_CASE("pinned keyboard spelling error reproduces the exprwssion typo") {
  NliExample example = Fixture();
  example.hypothesis = "expression is here";
  // Seed 345 draws word 0, position 4 ('e'), then neighbor 3 of "drsw".
  RngStream rng(345);
  const SpellingOutcome out =
      SpellingError(example, rng, SpellingMode::kKeyboard);
  CHECK(out.changed);
  CHECK(out.example.hypothesis == "exprwssion is here");
}

TEST_CASE("pinned swap on a two-word hypothesis picks a whole word") {
  NliExample example = Fixture();
  example.hypothesis = "he ok";
  // Seed 0 draws word 0; "he" has a single differing pair, so no pair draw
  // consumes randomness.
  RngStream rng(0);
  const SpellingOutcome out =
      SpellingError(example, rng, SpellingMode::kSwap);
  CHECK(out.changed);
  CHECK(out.example.hypothesis == "eh ok");
}

TEST_CASE("spelling error alters exactly one word") {
  const std::vector<std::string> hypotheses = {
      "He ran like an athlete.",
      "The committee discussed the proposal at length",
      "Seven quick answers, then silence!",
      "zebras graze",
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const std::string& hypothesis : hypotheses) {
      NliExample example = Fixture();
      example.hypothesis = hypothesis;
      for (SpellingMode mode :
           {SpellingMode::kSwap, SpellingMode::kKeyboard, SpellingMode::kMixed}) {
        RngStream rng(seed * 3 + static_cast<std::uint64_t>(mode));
        const SpellingOutcome out = SpellingError(example, rng, mode);
        REQUIRE(out.changed);

        const std::u32string before = DecodeUtf8(hypothesis);
        const std::u32string after = DecodeUtf8(out.example.hypothesis);
        REQUIRE(after.size() == before.size());

        const std::vector<WordSpan> before_words = TokenizeWords(before);
        const std::vector<WordSpan> after_words = TokenizeWords(after);
        REQUIRE(after_words.size() == before_words.size());
        int altered = 0;
        for (std::size_t w = 0; w < before_words.size(); ++w) {
          const std::u32string b =
              before.substr(before_words[w].begin, before_words[w].length());
          const std::u32string a =
              after.substr(after_words[w].begin, after_words[w].length());
          if (a != b) ++altered;
        }
        CHECK(altered == 1);
        // Everything outside word spans is untouched.
        std::u32string before_gaps = before;
        std::u32string after_gaps = after;
        for (std::size_t w = 0; w < before_words.size(); ++w) {
          for (std::size_t i = before_words[w].begin; i < before_words[w].end;
               ++i) {
            before_gaps[i] = U'_';
            after_gaps[i] = U'_';
          }
        }
        CHECK(before_gaps == after_gaps);
      }
    }
  }
}

TEST_CASE("swap spelling error is a transposition of one adjacent pair") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    NliExample example = Fixture();
    RngStream rng(seed);
    const SpellingOutcome out =
        SpellingError(example, rng, SpellingMode::kSwap);
    REQUIRE(out.changed);
    const std::u32string before = DecodeUtf8(example.hypothesis);
    const std::u32string after = DecodeUtf8(out.example.hypothesis);
    REQUIRE(after.size() == before.size());
    bool is_adjacent_swap = false;
    for (std::size_t i = 0; i + 1 < before.size(); ++i) {
      std::u32string candidate = before;
      std::swap(candidate[i], candidate[i + 1]);
      if (candidate == after && candidate != before) {
        is_adjacent_swap = true;
        break;
      }
    }
    CHECK(is_adjacent_swap);
  }
}

TEST_CASE("keyboard spelling error substitutes one QWERTY neighbor") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    NliExample example = Fixture();
    RngStream rng(seed);
    const SpellingOutcome out =
        SpellingError(example, rng, SpellingMode::kKeyboard);
    REQUIRE(out.changed);
    const std::u32string before = DecodeUtf8(example.hypothesis);
    const std::u32string after = DecodeUtf8(out.example.hypothesis);
    REQUIRE(after.size() == before.size());
    std::size_t diff_count = 0;
    std::size_t diff_at = 0;
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i] != after[i]) {
        ++diff_count;
        diff_at = i;
      }
    }
    REQUIRE(diff_count == 1);
    const std::u32string neighbors = KeyboardNeighbors(before[diff_at]);
    CHECK(neighbors.find(after[diff_at]) != std::u32string::npos);
  }
}

TEST_CASE("spelling error flags hypotheses it cannot edit") {
  NliExample example = Fixture();

  example.hypothesis = "пример текста";  // no QWERTY neighbors anywhere
  RngStream rng_keyboard(3);
  const SpellingOutcome keyboard =
      SpellingError(example, rng_keyboard, SpellingMode::kKeyboard);
  CHECK_FALSE(keyboard.changed);
  CHECK(keyboard.reason == "no character with keyboard neighbors");
  CHECK(keyboard.example == example);

  example.hypothesis = "aa bbb c !";  // every adjacent pair is equal
  RngStream rng_swap(3);
  const SpellingOutcome swap =
      SpellingError(example, rng_swap, SpellingMode::kSwap);
  CHECK_FALSE(swap.changed);
  CHECK(swap.reason == "no word with a differing adjacent pair");
  CHECK(swap.example == example);
}

TEST_CASE("mixed mode draws the operation before picking the word") {
  // Over many seeds mixed mode must produce both operation kinds on a
  // hypothesis where they are distinguishable: swaps permute letters,
  // keyboard substitutions introduce a letter absent from the original.
  NliExample example = Fixture();
  example.hypothesis = "dog";
  bool saw_swap = false;
  bool saw_substitution = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    RngStream rng(seed);
    const SpellingOutcome out =
        SpellingError(example, rng, SpellingMode::kMixed);
    REQUIRE(out.changed);
    std::multiset<char> before(example.hypothesis.begin(),
                               example.hypothesis.end());
    std::multiset<char> after(out.example.hypothesis.begin(),
                              out.example.hypothesis.end());
    if (before == after) {
      saw_swap = true;
    } else {
      saw_substitution = true;
    }
  }
  CHECK(saw_swap);
  CHECK(saw_substitution);
}

NliDataset SuiteFixture() {
  NliDataset dataset;
  dataset.examples.push_back(Fixture());

  NliExample second;
  second.pair_id = "fixture-2";
  second.premise = "The market closed early";
  second.hypothesis = "Traders went home before noon.";
  second.gold_label = NliLabel::kNeutral;
  second.genre = "telephone";
  second.partition = NliPartition::kMismatched;
  dataset.examples.push_back(second);

  NliExample third;
  third.pair_id = "fixture-3";
  third.premise = "Nobody spoke.";
  third.hypothesis = "Everyone was talking loudly!";
  third.gold_label = NliLabel::kContradiction;
  third.partition = NliPartition::kMatched;
  dataset.examples.push_back(third);
  return dataset;
}

TEST_CASE("stress suite preserves cardinality and order everywhere") {
  const NliDataset dataset = SuiteFixture();
  StressSuiteConfig config;
  config.global_seed = 7;
  config.sweep_n = 4;
  const StressSuite suite = BuildStressSuite(dataset, config);

  const std::vector<const NliDataset*> fixed = {
      &suite.word_overlap, &suite.negation, &suite.length_mismatch,
      &suite.spelling_error, &suite.premise_ablated};
  CHECK(suite.tautology_hypothesis.size() == 4);
  CHECK(suite.tautology_premise.size() == 4);

  std::vector<const NliDataset*> all = fixed;
  for (const NliDataset& d : suite.tautology_hypothesis) all.push_back(&d);
  for (const NliDataset& d : suite.tautology_premise) all.push_back(&d);
  for (const NliDataset* d : all) {
    REQUIRE(d->examples.size() == dataset.examples.size());
    for (std::size_t i = 0; i < d->examples.size(); ++i) {
      CHECK(d->examples[i].pair_id == dataset.examples[i].pair_id);
      CHECK(d->examples[i].gold_label == dataset.examples[i].gold_label);
      CHECK(d->examples[i].genre == dataset.examples[i].genre);
      CHECK(d->examples[i].partition == dataset.examples[i].partition);
    }
  }
}

TEST_CASE("stress suite sweep index n uses n repetitions") {
  const NliDataset dataset = SuiteFixture();
  StressSuiteConfig config;
  config.sweep_n = 3;
  const StressSuite suite = BuildStressSuite(dataset, config);
  for (int n = 1; n <= 3; ++n) {
    TautologySpec hyp_spec{TautologyTarget::kHypothesis, n,
                           TautologyPhrase::kAffirmative};
    TautologySpec pre_spec{TautologyTarget::kPremise, n,
                           TautologyPhrase::kAffirmative};
    for (std::size_t i = 0; i < dataset.examples.size(); ++i) {
      CHECK(suite.tautology_hypothesis[n - 1].examples[i] ==
            AddTautology(dataset.examples[i], hyp_spec));
      CHECK(suite.tautology_premise[n - 1].examples[i] ==
            AddTautology(dataset.examples[i], pre_spec));
    }
  }
}

TEST_CASE("stress suite spelling noise is keyed by pair id, not position") {
  NliDataset dataset = SuiteFixture();
  StressSuiteConfig config;
  config.global_seed = 99;

  const StressSuite forward = BuildStressSuite(dataset, config);
  std::swap(dataset.examples[0], dataset.examples[2]);
  const StressSuite reversed = BuildStressSuite(dataset, config);

  CHECK(forward.spelling_error.examples[0] ==
        reversed.spelling_error.examples[2]);
  CHECK(forward.spelling_error.examples[2] ==
        reversed.spelling_error.examples[0]);
  CHECK(forward.spelling_noops == reversed.spelling_noops);
}

TEST_CASE("stress suite is deterministic across runs") {
  const NliDataset dataset = SuiteFixture();
  StressSuiteConfig config;
  config.global_seed = 1234;
  const StressSuite a = BuildStressSuite(dataset, config);
  const StressSuite b = BuildStressSuite(dataset, config);
  CHECK(a.spelling_error == b.spelling_error);
  CHECK(a.word_overlap == b.word_overlap);
  CHECK(a.spelling_noops == b.spelling_noops);
}

TEST_CASE("stress suite counts spelling no-ops") {
  NliDataset dataset;
  NliExample blocked;
  blocked.pair_id = "blocked-1";
  blocked.premise = "Premise.";
  blocked.hypothesis = "шум";  // neither operation can act
  blocked.gold_label = NliLabel::kNeutral;
  dataset.examples.push_back(blocked);

  StressSuiteConfig config;
  const StressSuite suite = BuildStressSuite(dataset, config);
  CHECK(suite.spelling_noops == 1);
  CHECK(suite.spelling_error.examples[0] == blocked);
}

}  // namespace
}  // namespace stresskit
