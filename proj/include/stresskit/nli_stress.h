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

#ifndef STRESSKIT_NLI_STRESS_H_
#define STRESSKIT_NLI_STRESS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stresskit/corpus.h"
#include "stresskit/rng.h"

namespace stresskit {

// The two tautology phrases, verbatim. Each carries its own leading space so
// insertion before terminal punctuation needs no extra glue.
inline constexpr std::string_view kAffirmativeTautology = " and true is true";
inline constexpr std::string_view kNegatedTautology = " and false is not true";

enum class TautologyTarget { kPremise, kHypothesis };
enum class TautologyPhrase { kAffirmative, kNegated };

struct TautologySpec {
  TautologyTarget target = TautologyTarget::kHypothesis;
  int n = 1;
  TautologyPhrase phrase = TautologyPhrase::kAffirmative;
};

// Inserts the phrase, repeated spec.n times, into the target sentence: just
// before a terminal '.', '!' or '?' when present, otherwise at the end.
// Label, pair id, and genre are never touched.
NliExample AddTautology(const NliExample& example, const TautologySpec& spec);

// The three fixed distraction sets, as thin wrappers over AddTautology.
NliExample WordOverlap(const NliExample& example);        // hypothesis, n=1
NliExample NegationDistraction(const NliExample& example);  // negated, n=1
NliExample LengthMismatch(const NliExample& example);     // premise, n=5

enum class SpellingMode { kSwap, kKeyboard, kMixed };

// Outcome of SpellingError. `changed` is false only for flagged no-ops
// (no structurally eligible word for the drawn operation); `reason` then
// says why.
struct SpellingOutcome {
  NliExample example;
  bool changed = false;
  std::string reason;
};

// Applies exactly one character-level edit to exactly one word of the
// hypothesis: an adjacent-character swap or a keyboard-neighbor substitution
// (kMixed draws the operation 50/50 first). Word choice is uniform over
// structurally eligible words, character choices uniform over eligible
// positions, all from `rng`.
//
// Eligibility: swap needs a word with at least one differing adjacent pair
// (swapping "ss" would change nothing); keyboard needs a word with at least
// one character whose neighbor set is nonempty.
SpellingOutcome SpellingError(const NliExample& example, RngStream& rng,
                              SpellingMode mode);

// Replaces the premise with the empty string. Idempotent.
NliExample AblatePremise(const NliExample& example);

// Pure edit cores, exposed so tests can pin exact outcomes.
//
// SwapAdjacent swaps characters pair_index and pair_index+1 (both texts are
// UTF-8; positions count Unicode scalar values). ReplaceWithNeighbor replaces
// the character at `position` with entry `neighbor_index` of its sorted
// keyboard-neighbor set.
std::string SwapAdjacent(std::string_view word, std::size_t pair_index);
std::string ReplaceWithNeighbor(std::string_view word, std::size_t position,
                                std::size_t neighbor_index);

struct StressSuiteConfig {
  std::uint64_t global_seed = 0;
  int sweep_n = 5;  // tautology counts 1..sweep_n, per target
  SpellingMode spelling_mode = SpellingMode::kMixed;
};

// One dataset per fixed stress set, plus the parametric tautology sweep.
// sweep datasets are indexed by n-1 (n = 1..config.sweep_n).
struct StressSuite {
  NliDataset word_overlap;
  NliDataset negation;
  NliDataset length_mismatch;
  NliDataset spelling_error;
  NliDataset premise_ablated;
  std::vector<NliDataset> tautology_hypothesis;
  std::vector<NliDataset> tautology_premise;
  std::size_t spelling_noops = 0;
};

// Builds every stress variant of `dataset`. Cardinality and example order are
// preserved in each output; spelling noise derives one rng per example from
// (global_seed, pair_id, "spell"), so results do not depend on processing
// order.
StressSuite BuildStressSuite(const NliDataset& dataset,
                             const StressSuiteConfig& config);

}  // namespace stresskit

#endif  // STRESSKIT_NLI_STRESS_H_
