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

#include "stresskit/squad_noise.h"

#include <algorithm>

#include "stresskit/error.h"
#include "stresskit/keyboard.h"
#include "stresskit/unicode.h"

namespace stresskit {
namespace {

constexpr int kMaxShuffleAttempts = 16;

bool HasDistinctPermutation(std::u32string_view word) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] != word[0]) return true;
  }
  return false;
}

std::u32string ApplyCasePattern(std::u32string_view original,
                                std::u32string variant) {
  if (original.empty() || variant.empty()) return variant;
  bool all_upper = true;
  for (char32_t c : original) {
    if (!IsUpperChar(c)) {
      all_upper = false;
      break;
    }
  }
  if (all_upper && original.size() >= 2) {
    for (char32_t& c : variant) c = ToUpperChar(c);
  } else if (IsUpperChar(original[0])) {
    variant[0] = ToUpperChar(variant[0]);
  }
  return variant;
}

std::string Unchanged(std::string_view word, std::string* reason,
                      const char* why) {
  if (reason) *reason = why;
  return std::string(word);
}

}  // namespace

std::string_view ToString(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kNatural:
      return "natural";
    case NoiseKind::kSwap:
      return "swap";
    case NoiseKind::kMiddleRandom:
      return "middle_random";
    case NoiseKind::kFullyRandom:
      return "fully_random";
    case NoiseKind::kKeyboardTypo:
      return "keyboard_typo";
  }
  return "";
}

std::optional<NoiseKind> ParseNoiseKind(std::string_view text) {
  if (text == "natural") return NoiseKind::kNatural;
  if (text == "swap") return NoiseKind::kSwap;
  if (text == "middle_random") return NoiseKind::kMiddleRandom;
  if (text == "fully_random") return NoiseKind::kFullyRandom;
  if (text == "keyboard_typo") return NoiseKind::kKeyboardTypo;
  return std::nullopt;
}

std::string NoiseWord(std::string_view word, NoiseKind kind, RngStream& rng,
                      const NoiseLexicon* lexicon,
                      std::string* unchanged_reason) {
  if (unchanged_reason) unchanged_reason->clear();
  std::u32string chars = DecodeUtf8(word);

  switch (kind) {
    case NoiseKind::kNatural: {
      if (!lexicon) {
        throw ValidationError("natural noise requires a lexicon");
      }
      const std::vector<std::string>* variants =
          lexicon->Find(ToLowerUtf8(word));
      if (!variants) return Unchanged(word, unchanged_reason, "no lexicon entry");
      const std::string& variant = (*variants)[rng.Below(variants->size())];
      return EncodeUtf8(ApplyCasePattern(chars, DecodeUtf8(variant)));
    }

    case NoiseKind::kSwap: {
      if (chars.size() < 2) {
        return Unchanged(word, unchanged_reason, "word too short");
      }
      const std::size_t i = rng.Below(chars.size() - 1);
      std::swap(chars[i], chars[i + 1]);
      return EncodeUtf8(chars);
    }

    case NoiseKind::kMiddleRandom: {
      if (chars.size() <= 3) {
        return Unchanged(word, unchanged_reason, "word too short");
      }
      std::u32string interior = chars.substr(1, chars.size() - 2);
      rng.Shuffle(interior);
      std::copy(interior.begin(), interior.end(), chars.begin() + 1);
      return EncodeUtf8(chars);
    }

    case NoiseKind::kFullyRandom: {
      if (chars.size() < 2) {
        return Unchanged(word, unchanged_reason, "word too short");
      }
      const bool can_differ = HasDistinctPermutation(chars);
      std::u32string shuffled;
      for (int attempt = 0; attempt < kMaxShuffleAttempts; ++attempt) {
        shuffled = chars;
        rng.Shuffle(shuffled);
        if (!can_differ || shuffled != chars) break;
      }
      return EncodeUtf8(shuffled);
    }

    case NoiseKind::kKeyboardTypo: {
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        if (!KeyboardNeighbors(chars[i]).empty()) eligible.push_back(i);
      }
      if (eligible.empty()) {
        return Unchanged(word, unchanged_reason,
                         "no character with keyboard neighbors");
      }
      const std::size_t i = eligible[rng.Below(eligible.size())];
      const std::u32string neighbors = KeyboardNeighbors(chars[i]);
      chars[i] = neighbors[rng.Below(neighbors.size())];
      return EncodeUtf8(chars);
    }
  }
  return std::string(word);
}

NoisedPassage NoisePassage(std::string_view context, NoiseKind kind,
                           const RngStream& parent, const NoiseLexicon* lexicon,
                           double rate) {
  if (rate < 0.0 || rate > 1.0) {
    throw ValidationError("noise rate must be in [0, 1]");
  }
  const std::u32string original = DecodeUtf8(context);
  const std::vector<WordSpan> words = TokenizeWords(original);

  NoisedPassage out;
  out.offset_map.set_original_length(original.size());
  std::u32string noised;
  noised.reserve(original.size());

  std::size_t copied_to = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const WordSpan span = words[w];
    noised.append(original, copied_to, span.begin - copied_to);

    const std::string before =
        EncodeUtf8(std::u32string_view(original.data() + span.begin,
                                       span.length()));
    RngStream word_rng = parent.Fork(w);

    NoiseLogEntry entry;
    entry.word_index = w;
    entry.before = before;
    if (rate < 1.0 && word_rng.Unit() >= rate) {
      entry.after = before;
      entry.reason = "rate";
    } else {
      std::string reason;
      entry.after = NoiseWord(before, kind, word_rng, lexicon, &reason);
      entry.applied = reason.empty();
      entry.reason = std::move(reason);
    }

    const std::u32string replacement = DecodeUtf8(entry.after);
    out.offset_map.AddSegment(span.begin, span.length(), replacement.size());
    noised += replacement;
    out.log.push_back(std::move(entry));
    copied_to = span.end;
  }
  noised.append(original, copied_to, original.size() - copied_to);

  out.context = EncodeUtf8(noised);
  return out;
}

SquadParagraph AdaptAnswers(const SquadParagraph& paragraph,
                            const NoisedPassage& noised) {
  const std::u32string original = DecodeUtf8(paragraph.context);
  const std::u32string noised_context = DecodeUtf8(noised.context);

  SquadParagraph out;
  out.context = noised.context;
  out.qas = paragraph.qas;
  for (SquadQa& qa : out.qas) {
    for (SquadAnswer& answer : qa.answers) {
      const std::u32string text = DecodeUtf8(answer.text);
      if (answer.answer_start + text.size() > original.size() ||
          original.compare(answer.answer_start, text.size(), text) != 0) {
        throw ValidationError("qa " + qa.id +
                              ": original answer fails the substring check "
                              "at offset " +
                              std::to_string(answer.answer_start));
      }
      const std::size_t new_start = noised.offset_map.Map(answer.answer_start);
      const std::size_t new_end =
          noised.offset_map.Map(answer.answer_start + text.size());
      answer.answer_start = new_start;
      answer.text =
          EncodeUtf8(std::u32string_view(noised_context.data() + new_start,
                                         new_end - new_start));
    }
  }
  return out;
}

SquadDataset NoiseDataset(const SquadDataset& dataset, NoiseKind kind,
                          std::uint64_t global_seed,
                          const NoiseLexicon* lexicon, double rate,
                          NoiseRunStats* stats) {
  SquadDataset out;
  out.version = dataset.version;
  out.articles.reserve(dataset.articles.size());

  for (std::size_t a = 0; a < dataset.articles.size(); ++a) {
    const SquadArticle& article = dataset.articles[a];
    SquadArticle noised_article;
    noised_article.title = article.title;

    for (std::size_t p = 0; p < article.paragraphs.size(); ++p) {
      const SquadParagraph& paragraph = article.paragraphs[p];
      const std::string key =
          paragraph.qas.empty()
              ? "para:" + std::to_string(a) + ":" + std::to_string(p)
              : paragraph.qas.front().id;
      const RngStream parent = DeriveRng(global_seed, key, "noise");
      NoisedPassage noised =
          NoisePassage(paragraph.context, kind, parent, lexicon, rate);
      noised_article.paragraphs.push_back(AdaptAnswers(paragraph, noised));

      if (stats) {
        for (NoiseLogEntry& entry : noised.log) {
          ++stats->words_seen;
          if (entry.applied) {
            if (entry.after != entry.before) ++stats->words_changed;
          } else {
            ++stats->words_flagged;
          }
          stats->paragraph_keys.push_back(key);
          stats->entries.push_back(std::move(entry));
        }
      }
    }
    out.articles.push_back(std::move(noised_article));
  }
  return out;
}

}  // namespace stresskit
