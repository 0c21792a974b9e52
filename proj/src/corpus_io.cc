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

#include "stresskit/corpus_io.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "stresskit/error.h"
#include "stresskit/unicode.h"

namespace stresskit {

using Json = nlohmann::ordered_json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read " + path);
  return buffer.str();
}

// Splits into lines on '\n', tolerating a trailing '\r' (CRLF input) and a
// missing final newline.
std::vector<std::string> SplitLines(std::string_view contents) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < contents.size()) {
        lines.emplace_back(contents.substr(start));
      }
      break;
    }
    std::string_view line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::string Location(const std::string& path, std::size_t line_number) {
  return path + ":" + std::to_string(line_number);
}

const Json& RequireField(const Json& object, const char* key,
                         const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string RequireString(const Json& object, const char* key,
                          const std::string& where) {
  const Json& value = RequireField(object, key, where);
  if (!value.is_string()) {
    throw ParseError(where + ": field \"" + key + "\" must be a string");
  }
  return value.get<std::string>();
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void CheckTsvSafe(const std::string& field, const std::string& what) {
  if (field.find_first_of("\t\n\r") != std::string::npos) {
    throw ValidationError("cannot write TSV: " + what +
                          " contains a tab or line break");
  }
}

NliExample ParseNliJsonRow(const std::string& line, const std::string& where,
                           NliPartition partition, bool* unlabeled) {
  Json row;
  try {
    row = Json::parse(line);
  } catch (const Json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (!row.is_object()) throw ParseError(where + ": row is not a JSON object");

  NliExample example;
  example.partition = partition;
  const std::string raw_label = RequireString(row, "gold_label", where);
  if (raw_label == "-") {
    *unlabeled = true;
    return example;
  }
  const auto label = ParseNliLabel(raw_label);
  if (!label) {
    throw ParseError(where + ": unknown gold_label \"" + raw_label + "\"");
  }
  example.gold_label = *label;
  example.premise = RequireString(row, "sentence1", where);
  example.hypothesis = RequireString(row, "sentence2", where);
  example.pair_id = RequireString(row, "pairID", where);
  if (row.contains("genre") && row["genre"].is_string()) {
    example.genre = row["genre"].get<std::string>();
  }
  if (example.pair_id.empty()) throw ParseError(where + ": empty pairID");
  *unlabeled = false;
  return example;
}

}  // namespace

std::string_view ToString(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment:
      return "entailment";
    case NliLabel::kNeutral:
      return "neutral";
    case NliLabel::kContradiction:
      return "contradiction";
  }
  return "";
}

std::string_view ToString(NliPartition partition) {
  switch (partition) {
    case NliPartition::kMatched:
      return "matched";
    case NliPartition::kMismatched:
      return "mismatched";
    case NliPartition::kUnknown:
      return "unknown";
  }
  return "";
}

std::string_view ToString(Task task) {
  return task == Task::kNli ? "nli" : "qa";
}

std::optional<NliLabel> ParseNliLabel(std::string_view text) {
  if (text == "entailment") return NliLabel::kEntailment;
  if (text == "neutral") return NliLabel::kNeutral;
  if (text == "contradiction") return NliLabel::kContradiction;
  return std::nullopt;
}

const std::vector<std::string>* NoiseLexicon::Find(
    const std::string& lowercase_word) const {
  const auto it = entries.find(lowercase_word);
  return it == entries.end() ? nullptr : &it->second;
}

NliDataset LoadNli(const std::string& path, NliFormat format,
                   NliPartition partition) {
  const std::vector<std::string> lines = SplitLines(ReadFile(path));
  NliDataset dataset;
  std::unordered_set<std::string> seen_ids;

  auto add_example = [&](NliExample example, const std::string& where) {
    if (!seen_ids.insert(example.pair_id).second) {
      throw ValidationError(where + ": duplicate pairID \"" + example.pair_id +
                            "\"");
    }
    dataset.examples.push_back(std::move(example));
  };

  if (format == NliFormat::kJsonl) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      const std::string where = Location(path, i + 1);
      bool unlabeled = false;
      NliExample example =
          ParseNliJsonRow(lines[i], where, partition, &unlabeled);
      if (unlabeled) {
        ++dataset.dropped_unlabeled;
        continue;
      }
      add_example(std::move(example), where);
    }
    return dataset;
  }

  // TSV: header row names the columns; required columns may appear in any
  // order and extra columns are ignored.
  if (lines.empty() || lines[0].empty()) {
    if (lines.empty()) return dataset;  // empty file -> empty dataset
    throw ParseError(Location(path, 1) + ": empty header line");
  }
  const std::vector<std::string> header = SplitTabs(lines[0]);
  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t c = 0; c < header.size(); ++c) columns[header[c]] = c;
  for (const char* required :
       {"pairID", "sentence1", "sentence2", "gold_label"}) {
    if (!columns.count(required)) {
      throw ParseError(Location(path, 1) + ": header lacks column \"" +
                       std::string(required) + "\"");
    }
  }
  const auto genre_column = columns.find("genre");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = Location(path, i + 1);
    const std::vector<std::string> fields = SplitTabs(lines[i]);
    if (fields.size() < header.size()) {
      throw ParseError(where + ": expected " + std::to_string(header.size()) +
                       " columns, found " + std::to_string(fields.size()));
    }
    const std::string& raw_label = fields[columns["gold_label"]];
    if (raw_label == "-") {
      ++dataset.dropped_unlabeled;
      continue;
    }
    const auto label = ParseNliLabel(raw_label);
    if (!label) {
      throw ParseError(where + ": unknown gold_label \"" + raw_label + "\"");
    }
    NliExample example;
    example.pair_id = fields[columns["pairID"]];
    example.premise = fields[columns["sentence1"]];
    example.hypothesis = fields[columns["sentence2"]];
    example.gold_label = *label;
    if (genre_column != columns.end()) example.genre = fields[genre_column->second];
    example.partition = partition;
    if (example.pair_id.empty()) throw ParseError(where + ": empty pairID");
    add_example(std::move(example), where);
  }
  return dataset;
}

void SaveNli(const NliDataset& dataset, const std::string& path,
             NliFormat format) {
  std::string out;
  if (format == NliFormat::kJsonl) {
    for (const NliExample& example : dataset.examples) {
      Json row;
      row["sentence1"] = example.premise;
      row["sentence2"] = example.hypothesis;
      row["gold_label"] = std::string(ToString(example.gold_label));
      row["pairID"] = example.pair_id;
      row["genre"] = example.genre;
      out += row.dump();
      out += '\n';
    }
  } else {
    out = "pairID\tgenre\tsentence1\tsentence2\tgold_label\n";
    for (const NliExample& example : dataset.examples) {
      CheckTsvSafe(example.pair_id, "pairID " + example.pair_id);
      CheckTsvSafe(example.genre, "genre of " + example.pair_id);
      CheckTsvSafe(example.premise, "sentence1 of " + example.pair_id);
      CheckTsvSafe(example.hypothesis, "sentence2 of " + example.pair_id);
      out += example.pair_id;
      out += '\t';
      out += example.genre;
      out += '\t';
      out += example.premise;
      out += '\t';
      out += example.hypothesis;
      out += '\t';
      out += ToString(example.gold_label);
      out += '\n';
    }
  }
  WriteFileAtomic(path, out);
}

SquadDataset LoadSquad(const std::string& path) {
  Json root;
  try {
    root = Json::parse(ReadFile(path));
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(path + ": root is not an object");

  SquadDataset dataset;
  if (root.contains("version") && root["version"].is_string()) {
    dataset.version = root["version"].get<std::string>();
  }
  const Json& data = RequireField(root, "data", path);
  if (!data.is_array()) throw ParseError(path + ": \"data\" must be an array");

  for (const Json& article_json : data) {
    SquadArticle article;
    if (article_json.contains("title") && article_json["title"].is_string()) {
      article.title = article_json["title"].get<std::string>();
    }
    const Json& paragraphs = RequireField(article_json, "paragraphs", path);
    for (const Json& paragraph_json : paragraphs) {
      SquadParagraph paragraph;
      paragraph.context = RequireString(paragraph_json, "context", path);
      const Json& qas = RequireField(paragraph_json, "qas", path);
      for (const Json& qa_json : qas) {
        SquadQa qa;
        qa.id = RequireString(qa_json, "id", path);
        qa.question = RequireString(qa_json, "question", path);
        const Json& answers = RequireField(qa_json, "answers", path);
        for (const Json& answer_json : answers) {
          SquadAnswer answer;
          answer.text = RequireString(answer_json, "text", path);
          const Json& start = RequireField(answer_json, "answer_start", path);
          if (!start.is_number_integer() || start.get<long long>() < 0) {
            throw ParseError(path + ": qa " + qa.id +
                             ": answer_start must be a non-negative integer");
          }
          answer.answer_start = start.get<std::size_t>();
          qa.answers.push_back(std::move(answer));
        }
        paragraph.qas.push_back(std::move(qa));
      }
      article.paragraphs.push_back(std::move(paragraph));
    }
    dataset.articles.push_back(std::move(article));
  }
  ValidateSquad(dataset);
  return dataset;
}

void SaveSquad(const SquadDataset& dataset, const std::string& path) {
  Json root;
  root["version"] = dataset.version;
  root["data"] = Json::array();
  for (const SquadArticle& article : dataset.articles) {
    Json article_json;
    article_json["title"] = article.title;
    article_json["paragraphs"] = Json::array();
    for (const SquadParagraph& paragraph : article.paragraphs) {
      Json paragraph_json;
      paragraph_json["context"] = paragraph.context;
      paragraph_json["qas"] = Json::array();
      for (const SquadQa& qa : paragraph.qas) {
        Json qa_json;
        qa_json["id"] = qa.id;
        qa_json["question"] = qa.question;
        qa_json["answers"] = Json::array();
        for (const SquadAnswer& answer : qa.answers) {
          Json answer_json;
          answer_json["text"] = answer.text;
          answer_json["answer_start"] = answer.answer_start;
          qa_json["answers"].push_back(std::move(answer_json));
        }
        paragraph_json["qas"].push_back(std::move(qa_json));
      }
      article_json["paragraphs"].push_back(std::move(paragraph_json));
    }
    root["data"].push_back(std::move(article_json));
  }
  WriteFileAtomic(path, root.dump());
}

std::vector<std::string> SquadViolations(const SquadDataset& dataset) {
  std::vector<std::string> violations;
  std::unordered_set<std::string> seen_ids;
  for (const SquadArticle& article : dataset.articles) {
    for (const SquadParagraph& paragraph : article.paragraphs) {
      const std::u32string context = DecodeUtf8(paragraph.context);
      for (const SquadQa& qa : paragraph.qas) {
        if (qa.id.empty()) {
          violations.push_back("qa with empty id");
          continue;
        }
        if (!seen_ids.insert(qa.id).second) {
          violations.push_back("duplicate qa id " + qa.id);
        }
        if (qa.answers.empty()) {
          violations.push_back("qa " + qa.id + ": no answers");
        }
        for (const SquadAnswer& answer : qa.answers) {
          const std::u32string text = DecodeUtf8(answer.text);
          if (answer.answer_start > context.size() ||
              answer.answer_start + text.size() > context.size()) {
            violations.push_back("qa " + qa.id + ": answer span [" +
                                 std::to_string(answer.answer_start) + ", " +
                                 std::to_string(answer.answer_start +
                                                text.size()) +
                                 ") exceeds context length " +
                                 std::to_string(context.size()));
            continue;
          }
          if (context.compare(answer.answer_start, text.size(), text) != 0) {
            violations.push_back("qa " + qa.id +
                                 ": answer text does not match context at "
                                 "offset " +
                                 std::to_string(answer.answer_start));
          }
        }
      }
    }
  }
  return violations;
}

void ValidateSquad(const SquadDataset& dataset) {
  const std::vector<std::string> violations = SquadViolations(dataset);
  if (violations.empty()) return;
  std::string message =
      "SQuAD validation failed (" + std::to_string(violations.size()) +
      " violation" + (violations.size() == 1 ? "" : "s") + "):";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) message += "\n  " + violations[i];
  if (shown < violations.size()) {
    message += "\n  ... and " + std::to_string(violations.size() - shown) +
               " more";
  }
  throw ValidationError(message);
}

NoiseLexicon LoadLexicon(const std::string& path) {
  const std::vector<std::string> lines = SplitLines(ReadFile(path));
  NoiseLexicon lexicon;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = Location(path, i + 1);
    const std::vector<std::string> fields = SplitTabs(lines[i]);
    if (fields.size() < 2) {
      throw ParseError(where + ": lexicon line has no variants");
    }
    const std::string key = ToLowerUtf8(fields[0]);
    if (key.empty()) throw ParseError(where + ": empty lexicon key");
    std::vector<std::string>& variants = lexicon.entries[key];
    for (std::size_t f = 1; f < fields.size(); ++f) {
      if (fields[f].empty()) {
        throw ParseError(where + ": empty variant for \"" + key + "\"");
      }
      std::string variant = ToLowerUtf8(fields[f]);
      if (variant == key) {
        throw ParseError(where + ": variant \"" + fields[f] +
                         "\" equals its key");
      }
      if (std::find(variants.begin(), variants.end(), variant) ==
          variants.end()) {
        variants.push_back(std::move(variant));
      }
    }
  }
  return lexicon;
}

PredictionSet LoadPredictions(const std::string& path, Task task) {
  PredictionSet predictions;
  predictions.task = task;
  if (task == Task::kQa) {
    Json root;
    try {
      root = Json::parse(ReadFile(path));
    } catch (const Json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    if (!root.is_object()) {
      throw ParseError(path + ": QA predictions must be one JSON object");
    }
    for (const auto& [id, value] : root.items()) {
      if (id.empty()) throw ParseError(path + ": empty prediction id");
      if (!value.is_string()) {
        throw ParseError(path + ": prediction for \"" + id +
                         "\" must be a string");
      }
      predictions.entries[id] = value.get<std::string>();
    }
    return predictions;
  }

  const std::vector<std::string> lines = SplitLines(ReadFile(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = Location(path, i + 1);
    Json row;
    try {
      row = Json::parse(lines[i]);
    } catch (const Json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    const std::string id = RequireString(row, "pairID", where);
    const std::string label = RequireString(row, "label", where);
    if (id.empty()) throw ParseError(where + ": empty pairID");
    if (!ParseNliLabel(label)) {
      throw ParseError(where + ": unknown label \"" + label + "\"");
    }
    if (!predictions.entries.emplace(id, label).second) {
      throw ValidationError(where + ": duplicate pairID \"" + id + "\"");
    }
  }
  return predictions;
}

std::vector<std::string> LoadWordList(const std::string& path) {
  std::vector<std::string> words;
  for (const std::string& line : SplitLines(ReadFile(path))) {
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + temp.string());
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    if (!out.good()) throw Error("cannot write " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw Error("cannot move " + temp.string() + " to " + path + ": " +
                ec.message());
  }
}

}  // namespace stresskit
