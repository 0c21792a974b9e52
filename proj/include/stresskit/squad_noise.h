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

#ifndef STRESSKIT_SQUAD_NOISE_H_
#define STRESSKIT_SQUAD_NOISE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stresskit/corpus.h"
#include "stresskit/rng.h"
#include "stresskit/text.h"

namespace stresskit {

// The five per-word corruption channels.
enum class NoiseKind {
  kNatural,       // lexicon lookup of real misspellings
  kSwap,          // one adjacent-character transposition
  kMiddleRandom,  // shuffle interior, endpoints fixed
  kFullyRandom,   // shuffle everything
  kKeyboardTypo,  // one character -> a QWERTY neighbor
};

std::string_view ToString(NoiseKind kind);
std::optional<NoiseKind> ParseNoiseKind(std::string_view text);

// Corrupts one word. The word must be a letter run (what TokenizeWords
// yields). Channels that cannot act (word too short, no lexicon entry, no
// keyboard-eligible character) return the word unchanged and, when
// `unchanged_reason` is given, say why; a successfully applied channel clears
// it. Swap on an equal-character pair and shuffles that happen to draw the
// original count as applied: fully_random alone re-draws (up to 16 attempts
// total) until the result differs, whenever a distinct permutation exists.
//
// `lexicon` is required for kNatural; variants are stored lowercase and the
// original's capitalization pattern (initial capital, or all-caps for words
// of length >= 2) is reapplied.
std::string NoiseWord(std::string_view word, NoiseKind kind, RngStream& rng,
                      const NoiseLexicon* lexicon = nullptr,
                      std::string* unchanged_reason = nullptr);

// One entry per word span of a noised passage.
struct NoiseLogEntry {
  std::size_t word_index = 0;
  std::string before;
  std::string after;
  bool applied = false;
  std::string reason;  // set when !applied
};

struct NoisedPassage {
  std::string context;  // the noised text
  OffsetMap offset_map;
  std::vector<NoiseLogEntry> log;
};

// Applies `kind` to every word of `context`, leaving inter-word gaps
// verbatim. Each word uses its own stream, parent.Fork(word_index), so
// results are independent of processing order. With rate < 1.0 each word
// first draws Unit() and is skipped when the draw lands at or above `rate`;
// rate == 1.0 draws nothing extra.
NoisedPassage NoisePassage(std::string_view context, NoiseKind kind,
                           const RngStream& parent,
                           const NoiseLexicon* lexicon = nullptr,
                           double rate = 1.0);

// Rewrites a paragraph against its noised context: answer_start maps through
// the offset map, answer text becomes the substring between the mapped start
// and the mapped original end boundary. Questions and qa ids are untouched.
// Throws ValidationError if an original answer fails the substring check.
SquadParagraph AdaptAnswers(const SquadParagraph& paragraph,
                            const NoisedPassage& noised);

struct NoiseRunStats {
  std::size_t words_seen = 0;
  std::size_t words_changed = 0;
  std::size_t words_flagged = 0;  // channel could not act
  // Flattened per-word log; paragraph_keys[i] names the paragraph (its first
  // qa id, or "para:<article>:<paragraph>" when it has none).
  std::vector<std::string> paragraph_keys;
  std::vector<NoiseLogEntry> entries;
};

// Noises every paragraph of the dataset. Per-paragraph streams derive from
// (global_seed, first qa id, "noise"), so the transform is deterministic and
// paragraph-order-independent.
SquadDataset NoiseDataset(const SquadDataset& dataset, NoiseKind kind,
                          std::uint64_t global_seed,
                          const NoiseLexicon* lexicon = nullptr,
                          double rate = 1.0, NoiseRunStats* stats = nullptr);

}  // namespace stresskit

#endif  // STRESSKIT_SQUAD_NOISE_H_
