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

#ifndef STRESSKIT_CORPUS_IO_H_
#define STRESSKIT_CORPUS_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "stresskit/corpus.h"

namespace stresskit {

enum class NliFormat { kJsonl, kTsv };

// Parses an NLI corpus. JSONL rows carry the MultiNLI field names
// (sentence1, sentence2, gold_label, pairID, genre); extra fields are
// ignored. TSV files start with a header line naming the columns. Rows
// labeled "-" are dropped and counted. The partition is supplied by the
// caller because the distribution ships matched/mismatched as separate
// files. Throws ParseError (malformed row, with line number) or
// ValidationError (duplicate pairID).
NliDataset LoadNli(const std::string& path, NliFormat format,
                   NliPartition partition = NliPartition::kUnknown);

// Writes the dataset so that LoadNli reproduces it field for field.
// Dropped-row counts are load-time statistics and are not persisted.
void SaveNli(const NliDataset& dataset, const std::string& path,
             NliFormat format);

// Parses a SQuAD v1.1 JSON file and verifies every answer against the
// substring-at-offset invariant (offsets in Unicode scalar values). The
// loader never repairs offsets; violations raise ValidationError listing
// the offending qa ids.
SquadDataset LoadSquad(const std::string& path);

void SaveSquad(const SquadDataset& dataset, const std::string& path);

// One description per invariant violation (bad offsets, duplicate or empty
// ids, missing answers); empty means the dataset is valid.
std::vector<std::string> SquadViolations(const SquadDataset& dataset);

// Throws ValidationError when SquadViolations is nonempty.
void ValidateSquad(const SquadDataset& dataset);

// Tab-separated `word<TAB>variant...` lines. Keys and variants are
// lowercased; duplicate keys merge preserving first-seen variant order; a
// line with no variants, or a variant equal to its key, is an error naming
// the line.
NoiseLexicon LoadLexicon(const std::string& path);

// QA predictions: one JSON object mapping qa id -> answer string.
// NLI predictions: JSONL {"pairID": ..., "label": ...} with label one of the
// three classes (anything else is an error naming the bad token).
PredictionSet LoadPredictions(const std::string& path, Task task);

// Plain newline-separated token list (AddAny/AddCommon common words).
// Blank lines are skipped.
std::vector<std::string> LoadWordList(const std::string& path);

// Writes bytes through a temp file in the same directory plus rename, so
// readers never observe partial output.
void WriteFileAtomic(const std::string& path, std::string_view contents);

}  // namespace stresskit

#endif  // STRESSKIT_CORPUS_IO_H_
