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
// stresskit — build stress-test variants of NLI / QA datasets and score
// prediction files against them. Every generation command takes an explicit
// --seed and writes a manifest next to its outputs; identical invocations
// produce byte-identical files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stresskit/adversary.h"
#include "stresskit/corpus_io.h"
#include "stresskit/error.h"
#include "stresskit/eval.h"
#include "stresskit/manifest.h"
#include "stresskit/nli_stress.h"
#include "stresskit/rng.h"
#include "stresskit/squad_noise.h"

namespace stresskit {
namespace {

using Json = nlohmann::ordered_json;

// Command-line misuse that CLI11 cannot see (bad flag combinations); mapped
// to exit code 2 like parser errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NliFormat ParseFormat(const std::string& text) {
  if (text == "jsonl") return NliFormat::kJsonl;
  if (text == "tsv") return NliFormat::kTsv;
  throw UsageError("unknown NLI format \"" + text + "\" (jsonl or tsv)");
}

std::string FormatExtension(NliFormat format) {
  return format == NliFormat::kJsonl ? ".jsonl" : ".tsv";
}

SpellingMode ParseSpellingMode(const std::string& text) {
  if (text == "swap") return SpellingMode::kSwap;
  if (text == "keyboard") return SpellingMode::kKeyboard;
  if (text == "mixed") return SpellingMode::kMixed;
  throw UsageError("unknown spelling mode \"" + text +
                   "\" (swap, keyboard, or mixed)");
}

std::string PathStem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<std::string> ArgvTail(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return args;
}

// ---------------------------------------------------------------------------
// perturb-nli

struct PerturbNliOptions {
  std::string in;
  std::string out_dir;
  bool suite = false;
  std::string transform;
  std::uint64_t seed = 0;
  int sweep_n = 5;
  std::string format = "jsonl";
  std::string spelling = "mixed";
};

int RunPerturbNli(const PerturbNliOptions& opt,
                  const std::vector<std::string>& argv_tail) {
  if (opt.suite == !opt.transform.empty()) {
    throw UsageError("pass exactly one of --suite and --transform");
  }
  const NliFormat format = ParseFormat(opt.format);
  const NliDataset dataset = LoadNli(opt.in, format);

  std::filesystem::create_directories(opt.out_dir);
  RunManifest manifest;
  manifest.command = "perturb-nli";
  manifest.args = argv_tail;
  manifest.inputs.emplace_back("dataset", opt.in);
  manifest.seed = opt.seed;
  manifest.counts.emplace_back("input_examples", dataset.examples.size());
  manifest.counts.emplace_back("dropped_unlabeled", dataset.dropped_unlabeled);

  const std::string ext = FormatExtension(format);
  auto emit = [&](const std::string& name, const NliDataset& out) {
    const std::string path = opt.out_dir + "/" + name + ext;
    SaveNli(out, path, format);
    manifest.outputs.emplace_back(name, path);
    manifest.counts.emplace_back(name + "_examples", out.examples.size());
  };

  StressSuiteConfig config;
  config.global_seed = opt.seed;
  config.sweep_n = opt.sweep_n;
  config.spelling_mode = ParseSpellingMode(opt.spelling);

  if (opt.suite) {
    const StressSuite suite = BuildStressSuite(dataset, config);
    emit("word_overlap", suite.word_overlap);
    emit("negation", suite.negation);
    emit("length_mismatch", suite.length_mismatch);
    emit("spelling_error", suite.spelling_error);
    emit("premise_ablated", suite.premise_ablated);
    for (int n = 1; n <= config.sweep_n; ++n) {
      emit("tautology_hypothesis_" + std::to_string(n),
           suite.tautology_hypothesis[static_cast<std::size_t>(n - 1)]);
      emit("tautology_premise_" + std::to_string(n),
           suite.tautology_premise[static_cast<std::size_t>(n - 1)]);
    }
    manifest.counts.emplace_back("spelling_noops", suite.spelling_noops);
  } else {
    NliDataset out;
    std::size_t noops = 0;
    for (const NliExample& example : dataset.examples) {
      if (opt.transform == "word_overlap") {
        out.examples.push_back(WordOverlap(example));
      } else if (opt.transform == "negation") {
        out.examples.push_back(NegationDistraction(example));
      } else if (opt.transform == "length_mismatch") {
        out.examples.push_back(LengthMismatch(example));
      } else if (opt.transform == "premise_ablated") {
        out.examples.push_back(AblatePremise(example));
      } else if (opt.transform == "spelling_error") {
        RngStream rng = DeriveRng(opt.seed, example.pair_id, "spell");
        SpellingOutcome outcome =
            SpellingError(example, rng, config.spelling_mode);
        if (!outcome.changed) ++noops;
        out.examples.push_back(std::move(outcome.example));
      } else {
        throw UsageError(
            "unknown transform \"" + opt.transform +
            "\" (word_overlap, negation, length_mismatch, spelling_error, "
            "premise_ablated)");
      }
    }
    emit(opt.transform, out);
    if (opt.transform == "spelling_error") {
      manifest.counts.emplace_back("spelling_noops", noops);
    }
  }

  WriteManifest(manifest, opt.out_dir + "/manifest.json");
  std::cout << "perturb-nli: " << manifest.outputs.size()
            << " dataset(s) written to " << opt.out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// perturb-squad

struct PerturbSquadOptions {
  std::string in;
  std::string out;
  std::string noise;
  std::uint64_t seed = 0;
  std::string lexicon_path;
  double rate = 1.0;
  std::string log_path;
};

int RunPerturbSquad(const PerturbSquadOptions& opt,
                    const std::vector<std::string>& argv_tail) {
  const auto kind = ParseNoiseKind(opt.noise);
  if (!kind) {
    throw UsageError("unknown noise kind \"" + opt.noise +
                     "\" (natural, swap, middle_random, fully_random, "
                     "keyboard_typo)");
  }
  if (*kind == NoiseKind::kNatural && opt.lexicon_path.empty()) {
    throw UsageError("--noise natural requires --lexicon");
  }
  const SquadDataset dataset = LoadSquad(opt.in);
  NoiseLexicon lexicon;
  if (!opt.lexicon_path.empty()) lexicon = LoadLexicon(opt.lexicon_path);

  NoiseRunStats stats;
  const SquadDataset noised =
      NoiseDataset(dataset, *kind, opt.seed,
                   opt.lexicon_path.empty() ? nullptr : &lexicon, opt.rate,
                   &stats);
  SaveSquad(noised, opt.out);

  if (!opt.log_path.empty()) {
    std::string log;
    for (std::size_t i = 0; i < stats.entries.size(); ++i) {
      const NoiseLogEntry& entry = stats.entries[i];
      Json line;
      line["paragraph"] = stats.paragraph_keys[i];
      line["word_index"] = entry.word_index;
      line["kind"] = std::string(ToString(*kind));
      line["before"] = entry.before;
      line["after"] = entry.after;
      line["applied"] = entry.applied;
      if (!entry.applied) line["reason"] = entry.reason;
      log += line.dump();
      log += '\n';
    }
    WriteFileAtomic(opt.log_path, log);
  }

  std::size_t paragraphs = 0;
  std::size_t questions = 0;
  for (const SquadArticle& article : noised.articles) {
    paragraphs += article.paragraphs.size();
    for (const SquadParagraph& paragraph : article.paragraphs) {
      questions += paragraph.qas.size();
    }
  }

  RunManifest manifest;
  manifest.command = "perturb-squad";
  manifest.args = argv_tail;
  manifest.inputs.emplace_back("dataset", opt.in);
  if (!opt.lexicon_path.empty()) {
    manifest.inputs.emplace_back("lexicon", opt.lexicon_path);
  }
  manifest.outputs.emplace_back("dataset", opt.out);
  if (!opt.log_path.empty()) manifest.outputs.emplace_back("log", opt.log_path);
  manifest.seed = opt.seed;
  manifest.counts.emplace_back("paragraphs", paragraphs);
  manifest.counts.emplace_back("questions", questions);
  manifest.counts.emplace_back("words_seen", stats.words_seen);
  manifest.counts.emplace_back("words_changed", stats.words_changed);
  manifest.counts.emplace_back("words_flagged", stats.words_flagged);
  WriteManifest(manifest, opt.out + ".manifest.json");

  std::cout << "perturb-squad: " << stats.words_changed << "/"
            << stats.words_seen << " words changed ("
            << stats.words_flagged << " flagged), wrote " << opt.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// append-adversary

SentenceMap LoadSentenceMap(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!root.is_object()) {
    throw ParseError(path + ": sentence map must be a JSON object");
  }
  SentenceMap map;
  for (const auto& [qa_id, value] : root.items()) {
    if (value.is_string()) {
      map[qa_id].push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (const Json& sentence : value) {
        if (!sentence.is_string()) {
          throw ParseError(path + ": non-string sentence for qa " + qa_id);
        }
        map[qa_id].push_back(sentence.get<std::string>());
      }
    } else {
      throw ParseError(path + ": entry for qa " + qa_id +
                       " must be a string or an array of strings");
    }
  }
  return map;
}

int RunAppendAdversary(const std::string& in, const std::string& out,
                       const std::string& sentences_path,
                       const std::vector<std::string>& argv_tail) {
  const SquadDataset dataset = LoadSquad(in);
  const SentenceMap sentences = LoadSentenceMap(sentences_path);
  const SquadDataset adversarial = BuildAdversarialDataset(dataset, sentences);
  SaveSquad(adversarial, out);

  std::size_t questions = 0;
  for (const SquadArticle& article : adversarial.articles) {
    for (const SquadParagraph& paragraph : article.paragraphs) {
      questions += paragraph.qas.size();
    }
  }

  RunManifest manifest;
  manifest.command = "append-adversary";
  manifest.args = argv_tail;
  manifest.inputs.emplace_back("dataset", in);
  manifest.inputs.emplace_back("sentences", sentences_path);
  manifest.outputs.emplace_back("dataset", out);
  manifest.counts.emplace_back("mapped_qas", sentences.size());
  manifest.counts.emplace_back("output_questions", questions);
  WriteManifest(manifest, out + ".manifest.json");

  std::cout << "append-adversary: " << sentences.size()
            << " qa(s) mapped, wrote " << out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// addany

struct AddAnyOptions {
  std::string in;
  std::string out;
  std::string oracle;
  std::string mode = "add_any";
  std::uint64_t seed = 0;
  int d = 10;
  int epochs = 6;
  int k = 20;
  std::string common_path;
  std::string trace_path;
  std::string sentences_out;
};

int RunAddAny(const AddAnyOptions& opt,
              const std::vector<std::string>& argv_tail) {
  constexpr std::string_view kFilePrefix = "file:";
  if (opt.oracle.rfind(kFilePrefix, 0) != 0) {
    throw UsageError("--oracle must be file:<path>; only file-backed oracles "
                     "are shipped");
  }
  const std::string oracle_path(opt.oracle.substr(kFilePrefix.size()));

  AddAnyConfig config;
  config.d = opt.d;
  config.epochs = opt.epochs;
  config.k = opt.k;
  config.global_seed = opt.seed;
  if (opt.mode == "add_any") {
    config.mode = AdversaryMode::kAddAny;
  } else if (opt.mode == "add_common") {
    config.mode = AdversaryMode::kAddCommon;
  } else {
    throw UsageError("unknown mode \"" + opt.mode +
                     "\" (add_any or add_common)");
  }
  config.common_words = LoadWordList(opt.common_path);

  const SquadDataset dataset = LoadSquad(opt.in);

  SentenceMap sentences;
  std::string trace_log;
  std::size_t searches = 0;
  std::size_t oracle_calls = 0;
  std::string aborted;

  for (const SquadArticle& article : dataset.articles) {
    for (const SquadParagraph& paragraph : article.paragraphs) {
      for (const SquadQa& qa : paragraph.qas) {
        QaTask task;
        task.qa_id = qa.id;
        task.question = qa.question;
        task.context = paragraph.context;
        for (const SquadAnswer& answer : qa.answers) {
          task.gold_answers.push_back(answer.text);
        }
        FileOracle oracle(oracle_path, qa.id, paragraph.context);
        const AddAnyResult result = AddAnySearch(task, oracle, config);
        ++searches;
        oracle_calls += result.trace.oracle_calls;

        if (!opt.trace_path.empty()) {
          Json init;
          init["qa_id"] = qa.id;
          init["event"] = "init";
          init["sentence"] = result.trace.initial_sentence;
          init["score"] = result.trace.initial_score;
          trace_log += init.dump();
          trace_log += '\n';
          for (const TraceStep& step : result.trace.steps) {
            Json line;
            line["qa_id"] = qa.id;
            line["event"] = "step";
            line["epoch"] = step.epoch;
            line["position"] = step.position;
            line["candidates"] = step.candidates;
            line["scores"] = step.scores;
            line["chosen"] = step.chosen;
            line["score_after"] = step.score_after;
            trace_log += line.dump();
            trace_log += '\n';
          }
          Json done;
          done["qa_id"] = qa.id;
          done["event"] = result.aborted.empty() ? "done" : "aborted";
          done["sentence"] = result.sentence;
          done["score"] = result.score;
          done["oracle_calls"] = result.trace.oracle_calls;
          if (!result.aborted.empty()) done["error"] = result.aborted;
          trace_log += done.dump();
          trace_log += '\n';
        }

        if (!result.aborted.empty()) {
          aborted = "search for qa " + qa.id + " aborted: " + result.aborted;
          break;
        }
        sentences[qa.id].push_back(result.sentence);
      }
      if (!aborted.empty()) break;
    }
    if (!aborted.empty()) break;
  }

  if (!opt.trace_path.empty()) WriteFileAtomic(opt.trace_path, trace_log);
  if (!aborted.empty()) throw Error(aborted);

  const SquadDataset adversarial = BuildAdversarialDataset(dataset, sentences);
  SaveSquad(adversarial, opt.out);

  if (!opt.sentences_out.empty()) {
    Json out_map = Json::object();
    for (const auto& [qa_id, list] : sentences) out_map[qa_id] = list.front();
    WriteFileAtomic(opt.sentences_out, out_map.dump(2) + "\n");
  }

  RunManifest manifest;
  manifest.command = "addany";
  manifest.args = argv_tail;
  manifest.inputs.emplace_back("dataset", opt.in);
  manifest.inputs.emplace_back("oracle", oracle_path);
  manifest.inputs.emplace_back("common_words", opt.common_path);
  manifest.outputs.emplace_back("dataset", opt.out);
  if (!opt.trace_path.empty()) {
    manifest.outputs.emplace_back("trace", opt.trace_path);
  }
  if (!opt.sentences_out.empty()) {
    manifest.outputs.emplace_back("sentences", opt.sentences_out);
  }
  manifest.seed = opt.seed;
  manifest.counts.emplace_back("searches", searches);
  manifest.counts.emplace_back("oracle_calls", oracle_calls);
  WriteManifest(manifest, opt.out + ".manifest.json");

  std::cout << "addany: " << searches << " search(es), " << oracle_calls
            << " oracle call(s), wrote " << opt.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
  std::string dataset;
  std::string predictions;
  std::string task;
  std::string original_report;
  std::string out_prefix;
  std::string name;
  bool allow_missing = false;
  std::string confusion_path;
  std::string confusion_reference;
};

// Pulls the original value for `metric` out of a previously written report
// CSV (first row whose metric column matches).
std::optional<double> OriginalValue(const std::string& path,
                                    const std::string& metric) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    // dataset,metric,value,... — report fields never contain quoted commas
    // for the columns we need, so a plain split suffices.
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() >= 3 && fields[1] == metric) {
      try {
        return std::stod(fields[2]);
      } catch (const std::exception&) {
        throw ParseError(path + ": bad value \"" + fields[2] + "\"");
      }
    }
  }
  return std::nullopt;
}

void WriteConfusionCsv(const ConfusionMatrix& matrix, const std::string& path) {
  constexpr NliLabel kLabels[] = {NliLabel::kEntailment, NliLabel::kNeutral,
                                  NliLabel::kContradiction};
  std::string out = "# reference: " + matrix.reference_source() +
                    ", prediction: " + matrix.prediction_source() + "\n";
  out += "reference";
  for (const NliLabel col : kLabels) {
    out += ',';
    out += ToString(col);
  }
  out += '\n';
  for (const NliLabel row : kLabels) {
    out += ToString(row);
    for (const NliLabel col : kLabels) {
      out += ',';
      out += std::to_string(matrix.count(row, col));
    }
    out += '\n';
  }
  WriteFileAtomic(path, out);
}

int RunEvaluate(const EvaluateOptions& opt) {
  EvalRow row;
  row.dataset = opt.name.empty() ? PathStem(opt.dataset) : opt.name;

  if (opt.task == "nli") {
    const NliDataset dataset = LoadNli(opt.dataset, NliFormat::kJsonl);
    const PredictionSet predictions = LoadPredictions(opt.predictions,
                                                      Task::kNli);
    row.metric = "accuracy";
    row.value = NliAccuracy(dataset, predictions, opt.allow_missing);
    std::size_t covered = 0;
    for (const NliExample& example : dataset.examples) {
      covered += predictions.entries.count(example.pair_id);
    }
    row.coverage = dataset.examples.empty()
                       ? 0.0
                       : static_cast<double>(covered) /
                             static_cast<double>(dataset.examples.size());

    if (!opt.confusion_path.empty()) {
      Labeling reference = GoldLabeling(dataset);
      std::string reference_source = "gold";
      if (!opt.confusion_reference.empty()) {
        reference = PredictionLabeling(
            LoadPredictions(opt.confusion_reference, Task::kNli));
        reference_source = PathStem(opt.confusion_reference);
      }
      const ConfusionMatrix matrix =
          Confusion(reference, PredictionLabeling(predictions),
                    reference_source, PathStem(opt.predictions));
      WriteConfusionCsv(matrix, opt.confusion_path);
    }
  } else if (opt.task == "qa") {
    if (!opt.confusion_path.empty()) {
      throw UsageError("--confusion applies to --task nli only");
    }
    const SquadDataset dataset = LoadSquad(opt.dataset);
    const PredictionSet predictions = LoadPredictions(opt.predictions,
                                                      Task::kQa);
    row.metric = "exact_match";
    row.value = ExactMatch(dataset, predictions, opt.allow_missing);
    std::size_t total = 0;
    std::size_t covered = 0;
    for (const SquadArticle& article : dataset.articles) {
      for (const SquadParagraph& paragraph : article.paragraphs) {
        for (const SquadQa& qa : paragraph.qas) {
          ++total;
          covered += predictions.entries.count(qa.id);
        }
      }
    }
    row.coverage = total == 0 ? 0.0
                              : static_cast<double>(covered) /
                                    static_cast<double>(total);
  } else {
    throw UsageError("--task must be nli or qa");
  }

  if (!opt.original_report.empty()) {
    const std::optional<double> original =
        OriginalValue(opt.original_report, row.metric);
    if (!original) {
      throw ValidationError(opt.original_report + " has no " + row.metric +
                            " row to bind --original against");
    }
    row.reduction = Reduction(*original, row.value);
  }

  EvalReport report;
  report.rows.push_back(row);
  std::cout << RenderReportText(report);
  if (!opt.out_prefix.empty()) {
    EmitReport(report, opt.out_prefix + ".csv", opt.out_prefix + ".txt");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// validate

int RunValidate(const std::string& dataset_path, const std::string& task,
                const std::string& format) {
  if (task == "nli") {
    const NliDataset dataset = LoadNli(dataset_path, ParseFormat(format));
    std::cout << "valid: " << dataset.examples.size() << " examples ("
              << dataset.dropped_unlabeled << " unlabeled rows dropped)\n";
  } else if (task == "qa") {
    const SquadDataset dataset = LoadSquad(dataset_path);
    std::size_t questions = 0;
    for (const SquadArticle& article : dataset.articles) {
      for (const SquadParagraph& paragraph : article.paragraphs) {
        questions += paragraph.qas.size();
      }
    }
    std::cout << "valid: " << questions << " questions\n";
  } else {
    throw UsageError("--task must be nli or qa");
  }
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"stress-test dataset generation and scoring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  PerturbNliOptions nli;
  CLI::App* perturb_nli =
      app.add_subcommand("perturb-nli", "build NLI stress variants");
  perturb_nli->add_option("in", nli.in, "input NLI file")->required();
  perturb_nli->add_option("out_dir", nli.out_dir, "output directory")
      ->required();
  perturb_nli->add_flag("--suite", nli.suite,
                        "write the full stress suite (fixed sets + sweep)");
  perturb_nli->add_option("--transform", nli.transform,
                          "write one set: word_overlap, negation, "
                          "length_mismatch, spelling_error, premise_ablated");
  perturb_nli->add_option("--seed", nli.seed, "global seed")->required();
  perturb_nli->add_option("--n", nli.sweep_n,
                          "tautology sweep upper bound (suite mode)");
  perturb_nli->add_option("--format", nli.format, "jsonl or tsv");
  perturb_nli->add_option("--spelling-mode", nli.spelling,
                          "swap, keyboard, or mixed");

  PerturbSquadOptions squad;
  CLI::App* perturb_squad =
      app.add_subcommand("perturb-squad", "apply per-word noise to QA passages");
  perturb_squad->add_option("in", squad.in, "input SQuAD file")->required();
  perturb_squad->add_option("out", squad.out, "output SQuAD file")->required();
  perturb_squad
      ->add_option("--noise", squad.noise,
                   "natural, swap, middle_random, fully_random, keyboard_typo")
      ->required();
  perturb_squad->add_option("--seed", squad.seed, "global seed")->required();
  perturb_squad->add_option("--lexicon", squad.lexicon_path,
                            "misspelling lexicon (required for natural)");
  perturb_squad->add_option("--rate", squad.rate,
                            "per-word application probability, default 1.0");
  perturb_squad->add_option("--log", squad.log_path,
                            "write a JSONL per-word change log");

  std::string adv_in, adv_out, adv_sentences;
  CLI::App* append_adversary = app.add_subcommand(
      "append-adversary", "concatenate crafted sentences to paragraphs");
  append_adversary->add_option("in", adv_in, "input SQuAD file")->required();
  append_adversary->add_option("out", adv_out, "output SQuAD file")->required();
  append_adversary
      ->add_option("--sentences", adv_sentences,
                   "JSON map qa_id -> sentence (or array of sentences)")
      ->required();

  AddAnyOptions addany;
  CLI::App* addany_cmd = app.add_subcommand(
      "addany", "greedy adversarial sentence search against a file oracle");
  addany_cmd->add_option("in", addany.in, "input SQuAD file")->required();
  addany_cmd->add_option("out", addany.out, "output SQuAD file")->required();
  addany_cmd->add_option("--oracle", addany.oracle, "file:<scores.json>")
      ->required();
  addany_cmd->add_option("--mode", addany.mode, "add_any or add_common");
  addany_cmd->add_option("--seed", addany.seed, "global seed")->required();
  addany_cmd->add_option("--d", addany.d, "sentence length in words");
  addany_cmd->add_option("--epochs", addany.epochs, "greedy passes");
  addany_cmd->add_option("--k", addany.k, "candidates per position visit");
  addany_cmd->add_option("--common", addany.common_path,
                         "common-word list, one per line")
      ->required();
  addany_cmd->add_option("--trace", addany.trace_path, "JSONL search trace");
  addany_cmd->add_option("--sentences-out", addany.sentences_out,
                         "write the found sentences as a JSON map");

  EvaluateOptions eval;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "score a prediction file");
  evaluate->add_option("dataset", eval.dataset, "dataset file")->required();
  evaluate->add_option("predictions", eval.predictions, "prediction file")
      ->required();
  evaluate->add_option("--task", eval.task, "nli or qa")->required();
  evaluate->add_option("--original", eval.original_report,
                       "report CSV with the unstressed run; binds the "
                       "bracketed reduction");
  evaluate->add_option("--out", eval.out_prefix,
                       "write <prefix>.csv and <prefix>.txt");
  evaluate->add_option("--name", eval.name,
                       "dataset name in the report (default: file stem)");
  evaluate->add_flag("--allow-missing", eval.allow_missing,
                     "score missing predictions as wrong instead of failing");
  evaluate->add_option("--confusion", eval.confusion_path,
                       "write a 3x3 transition matrix CSV (nli)");
  evaluate->add_option("--confusion-reference", eval.confusion_reference,
                       "prediction file used as the reference axis instead "
                       "of gold labels");

  std::string val_dataset, val_task, val_format = "jsonl";
  CLI::App* validate =
      app.add_subcommand("validate", "check dataset invariants");
  validate->add_option("dataset", val_dataset, "dataset file")->required();
  validate->add_option("--task", val_task, "nli or qa")->required();
  validate->add_option("--format", val_format, "jsonl or tsv (nli)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::vector<std::string> argv_tail = ArgvTail(argc, argv);
  try {
    if (perturb_nli->parsed()) return RunPerturbNli(nli, argv_tail);
    if (perturb_squad->parsed()) return RunPerturbSquad(squad, argv_tail);
    if (append_adversary->parsed()) {
      return RunAppendAdversary(adv_in, adv_out, adv_sentences, argv_tail);
    }
    if (addany_cmd->parsed()) return RunAddAny(addany, argv_tail);
    if (evaluate->parsed()) return RunEvaluate(eval);
    if (validate->parsed()) return RunValidate(val_dataset, val_task,
                                               val_format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace
}  // namespace stresskit

int main(int argc, char** argv) { return stresskit::Run(argc, argv); }
