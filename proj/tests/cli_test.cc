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

// End-to-end tests that drive the installed binary (path in STRESSKIT_BIN)
// through a shell, the way users run it.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "stresskit/corpus.h"
#include "stresskit/corpus_io.h"
#include "stresskit/rng.h"
#include "test_util.h"

namespace stresskit {
namespace {

using Json = nlohmann::ordered_json;

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CommandResult RunCli(const std::string& args, TempDir& dir) {
  const char* binary = std::getenv("STRESSKIT_BIN");
  REQUIRE_MESSAGE(binary != nullptr, "STRESSKIT_BIN must point at the CLI");
  static int counter = 0;
  const std::string capture =
      dir.Path("capture_" + std::to_string(counter++) + ".txt");
  const std::string command =
      std::string(binary) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = ReadWholeFile(capture);
  return result;
}

const char kNliJsonl[] =
    R"({"sentence1": "Then he ran.", "sentence2": "He ran like an athlete.", "gold_label": "entailment", "pairID": "id-1", "genre": "fiction"}
{"sentence1": "The market closed early.", "sentence2": "Traders went home.", "gold_label": "neutral", "pairID": "id-2", "genre": "telephone"}
{"sentence1": "Nobody spoke.", "sentence2": "Everyone was talking.", "gold_label": "contradiction", "pairID": "id-3", "genre": "fiction"}
)";

std::string ToySquadJson() {
  Json qa1 = {{"id", "q1"},
              {"question", "Who ran?"},
              {"answers", Json::array({{{"text", "he"}, {"answer_start", 5}}})}};
  Json qa2 = {
      {"id", "q2"},
      {"question", "Until when?"},
      {"answers", Json::array({{{"text", "dawn"}, {"answer_start", 11}}})}};
  Json data = {
      {"version", "1.1"},
      {"data", Json::array(
                   {{{"title", "Toy"},
                     {"paragraphs",
                      Json::array({{{"context", "Then he ran."},
                                    {"qas", Json::array({qa1})}},
                                   {{"context", "Stay until dawn."},
                                    {"qas", Json::array({qa2})}}})}}})}};
  return data.dump(1) + "\n";
}

TEST_CASE("version flag reports the tool version") {
  TempDir dir;
  const CommandResult result = RunCli("--version", dir);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("a missing or unknown subcommand is a usage error") {
  TempDir dir;
  CHECK(RunCli("", dir).exit_code == 2);
  CHECK(RunCli("frobnicate", dir).exit_code == 2);
}

TEST_CASE("perturb-nli writes the full suite with a manifest") {
  TempDir dir;
  const std::string in = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  const std::string out_dir = dir.Path("suite");

  const CommandResult result =
      RunCli("perturb-nli " + in + " " + out_dir + " --suite --seed 7 --n 3",
             dir);
  CHECK(result.exit_code == 0);
  for (const char* name :
       {"word_overlap", "negation", "length_mismatch", "spelling_error",
        "premise_ablated", "tautology_hypothesis_1", "tautology_hypothesis_2",
        "tautology_hypothesis_3", "tautology_premise_1", "tautology_premise_2",
        "tautology_premise_3"}) {
    const NliDataset out = LoadNli(
        out_dir + "/" + std::string(name) + ".jsonl", NliFormat::kJsonl);
    CHECK(out.examples.size() == 3);
  }
  const NliDataset overlap =
      LoadNli(out_dir + "/word_overlap.jsonl", NliFormat::kJsonl);
  CHECK(overlap.examples[0].hypothesis ==
        "He ran like an athlete and true is true.");

  const Json manifest = Json::parse(ReadWholeFile(out_dir + "/manifest.json"));
  CHECK(manifest.at("command") == "perturb-nli");
  CHECK(manifest.at("seed") == 7);
  CHECK(manifest.at("counts").at("input_examples") == 3);
  CHECK(manifest.at("outputs").size() == 11);
}

TEST_CASE("perturb-nli reruns are byte-identical") {
  TempDir dir;
  const std::string in = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  const std::string args = " --suite --seed 99 --n 2";
  CHECK(RunCli("perturb-nli " + in + " " + dir.Path("a") + args, dir)
            .exit_code == 0);
  CHECK(RunCli("perturb-nli " + in + " " + dir.Path("b") + args, dir)
            .exit_code == 0);
  for (const char* name : {"word_overlap", "spelling_error",
                           "tautology_premise_2", "premise_ablated"}) {
    CHECK(ReadWholeFile(dir.Path("a") + "/" + name + ".jsonl") ==
          ReadWholeFile(dir.Path("b") + "/" + name + ".jsonl"));
  }
}

TEST_CASE("perturb-nli single transform matches the library") {
  TempDir dir;
  const std::string in = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  const std::string out_dir = dir.Path("negation_out");
  CHECK(RunCli("perturb-nli " + in + " " + out_dir +
                   " --transform negation --seed 1",
               dir)
            .exit_code == 0);
  const NliDataset out =
      LoadNli(out_dir + "/negation.jsonl", NliFormat::kJsonl);
  REQUIRE(out.examples.size() == 3);
  CHECK(out.examples[0].hypothesis ==
        "He ran like an athlete and false is not true.");
  CHECK(out.examples[2].hypothesis ==
        "Everyone was talking and false is not true.");
}

TEST_CASE("perturb-nli pinned spelling seed reproduces the athlete typo") {
  TempDir dir;
  const std::string in = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  const std::string out_dir = dir.Path("spell_out");
  CHECK(RunCli("perturb-nli " + in + " " + out_dir +
                   " --transform spelling_error --seed 16 "
                   "--spelling-mode swap",
               dir)
            .exit_code == 0);
  const NliDataset out =
      LoadNli(out_dir + "/spelling_error.jsonl", NliFormat::kJsonl);
  CHECK(out.examples[0].hypothesis == "He ran like an athleet.");
}

TEST_CASE("perturb-nli wants exactly one mode") {
  TempDir dir;
  const std::string in = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  CHECK(RunCli("perturb-nli " + in + " " + dir.Path("x") + " --seed 1", dir)
            .exit_code == 2);
  CHECK(RunCli("perturb-nli " + in + " " + dir.Path("x") +
                   " --suite --transform negation --seed 1",
               dir)
            .exit_code == 2);
  CHECK(RunCli("perturb-nli " + in + " " + dir.Path("x") +
                   " --transform bogus --seed 1",
               dir)
            .exit_code == 2);
}

TEST_CASE("perturb-nli speaks tsv on both ends") {
  TempDir dir;
  dir.Write("dev.jsonl", kNliJsonl);
  const NliDataset dataset =
      LoadNli(dir.Path("dev.jsonl"), NliFormat::kJsonl);
  const std::string tsv_path = dir.Path("dev.tsv");
  SaveNli(dataset, tsv_path, NliFormat::kTsv);

  const std::string out_dir = dir.Path("tsv_out");
  CHECK(RunCli("perturb-nli " + tsv_path + " " + out_dir +
                   " --transform word_overlap --seed 3 --format tsv",
               dir)
            .exit_code == 0);
  const NliDataset overlap =
      LoadNli(out_dir + "/word_overlap.tsv", NliFormat::kTsv);
  REQUIRE(overlap.examples.size() == 3);
  CHECK(overlap.examples[0].hypothesis ==
        "He ran like an athlete and true is true.");
  CHECK(overlap.examples[0].genre == "fiction");
}

TEST_CASE("perturb-squad pinned seed reproduces the swapped passage") {
  TempDir dir;
  const std::string in = dir.Path("squad.json");
  dir.Write("squad.json", ToySquadJson());
  const std::string out = dir.Path("noised.json");
  const std::string log = dir.Path("noise_log.jsonl");

  const CommandResult result = RunCli(
      "perturb-squad " + in + " " + out + " --noise swap --seed 2 --log " +
          log,
      dir);
  CHECK(result.exit_code == 0);

  const SquadDataset noised = LoadSquad(out);
  CHECK(noised.articles[0].paragraphs[0].context == "hTen eh arn.");
  CHECK(noised.articles[0].paragraphs[0].qas[0].answers[0].text == "eh");
  CHECK(noised.articles[0].paragraphs[0].qas[0].answers[0].answer_start == 5);

  // The log has one JSONL entry per word, tagged with the paragraph key.
  std::size_t lines = 0;
  std::string first_paragraph;
  std::istringstream log_in(ReadWholeFile(log));
  std::string line;
  while (std::getline(log_in, line)) {
    const Json entry = Json::parse(line);
    if (lines == 0) first_paragraph = entry.at("paragraph");
    CHECK(entry.at("kind") == "swap");
    ++lines;
  }
  CHECK(lines == 6);  // 3 words + 3 words
  CHECK(first_paragraph == "q1");

  // Reruns are byte-identical.
  const std::string out2 = dir.Path("noised2.json");
  CHECK(RunCli("perturb-squad " + in + " " + out2 + " --noise swap --seed 2",
               dir)
            .exit_code == 0);
  CHECK(ReadWholeFile(out) == ReadWholeFile(out2));

  // The noised dataset still validates.
  CHECK(RunCli("validate " + out + " --task qa", dir).exit_code == 0);
}

TEST_CASE("perturb-squad natural noise needs a lexicon") {
  TempDir dir;
  const std::string in = dir.Path("squad.json");
  dir.Write("squad.json", ToySquadJson());
  CHECK(RunCli("perturb-squad " + in + " " + dir.Path("out.json") +
                   " --noise natural --seed 1",
               dir)
            .exit_code == 2);
  CHECK(RunCli("perturb-squad " + in + " " + dir.Path("out.json") +
                   " --noise sparkle --seed 1",
               dir)
            .exit_code == 2);
}

TEST_CASE("perturb-squad natural noise applies the lexicon") {
  TempDir dir;
  const std::string in = dir.Path("squad.json");
  dir.Write("squad.json", ToySquadJson());
  dir.Write("lexicon.tsv", "until\tuntill\n");
  const std::string out = dir.Path("natural.json");
  CHECK(RunCli("perturb-squad " + in + " " + out +
                   " --noise natural --seed 5 --lexicon " +
                   dir.Path("lexicon.tsv"),
               dir)
            .exit_code == 0);
  const SquadDataset noised = LoadSquad(out);
  CHECK(noised.articles[0].paragraphs[1].context == "Stay untill dawn.");
  CHECK(noised.articles[0].paragraphs[1].qas[0].answers[0].answer_start == 12);
}

TEST_CASE("append-adversary splits paragraphs by sentence map") {
  TempDir dir;
  const std::string in = dir.Path("squad.json");
  dir.Write("squad.json", ToySquadJson());
  dir.Write("sentences.json",
            "{\"q1\": \"Quarterback Jeff Dean had jersey number 37.\"}\n");
  const std::string out = dir.Path("adversarial.json");
  CHECK(RunCli("append-adversary " + in + " " + out + " --sentences " +
                   dir.Path("sentences.json"),
               dir)
            .exit_code == 0);
  const SquadDataset adv = LoadSquad(out);
  REQUIRE(adv.articles[0].paragraphs.size() == 2);
  CHECK(adv.articles[0].paragraphs[0].context ==
        "Then he ran. Quarterback Jeff Dean had jersey number 37.");
  CHECK(adv.articles[0].paragraphs[0].qas[0].id == "q1-adv");
  CHECK(adv.articles[0].paragraphs[1].context == "Stay until dawn.");

  dir.Write("bad.json", "{\"ghost\": \"Boo.\"}\n");
  const CommandResult bad = RunCli(
      "append-adversary " + in + " " + dir.Path("bad_out.json") +
          " --sentences " + dir.Path("bad.json"),
      dir);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("ghost") != std::string::npos);
}

std::string HashHex(const std::string& sentence) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(sentence)));
  return buffer;
}

TEST_CASE("addany converges on a toy file oracle and traces the search") {
  TempDir dir;
  Json qa = {{"id", "toy1"},
             {"question", "Anything?"},
             {"answers",
              Json::array({{{"text", "Base"}, {"answer_start", 0}}})}};
  Json data = {
      {"version", "1.1"},
      {"data",
       Json::array({{{"title", "Toy"},
                     {"paragraphs",
                      Json::array({{{"context", "Base context."},
                                    {"qas", Json::array({qa})}}})}}})}};
  const std::string in = dir.Path("squad.json");
  dir.Write("squad.json", data.dump(1) + "\n");

  Json oracle = Json::object();
  oracle["toy1"] = Json::object();
  oracle["toy1"][HashHex("elephant")] = 0.0;
  oracle["toy1"]["default"] = 1.0;
  dir.Write("scores.json", oracle.dump(1) + "\n");
  dir.Write("common.txt", "cat\ndog\nelephant\n");

  const std::string out = dir.Path("adversarial.json");
  const std::string trace = dir.Path("trace.jsonl");
  const std::string sentences = dir.Path("sentences.json");
  const CommandResult result = RunCli(
      "addany " + in + " " + out + " --oracle file:" + dir.Path("scores.json") +
          " --mode add_common --seed 0 --d 1 --epochs 1 --k 20 --common " +
          dir.Path("common.txt") + " --trace " + trace + " --sentences-out " +
          sentences,
      dir);
  CHECK(result.exit_code == 0);

  const SquadDataset adv = LoadSquad(out);
  CHECK(adv.articles[0].paragraphs[0].context == "Base context. elephant");
  CHECK(adv.articles[0].paragraphs[0].qas[0].id == "toy1-adv");

  const Json found = Json::parse(ReadWholeFile(sentences));
  CHECK(found.at("toy1") == "elephant");

  std::vector<Json> events;
  std::istringstream trace_in(ReadWholeFile(trace));
  std::string line;
  while (std::getline(trace_in, line)) events.push_back(Json::parse(line));
  REQUIRE(events.size() == 3);  // init, one step, done
  CHECK(events.front().at("event") == "init");
  CHECK(events[1].at("event") == "step");
  CHECK(events[1].at("candidates").size() == 20);
  CHECK(events.back().at("event") == "done");
  CHECK(events.back().at("sentence") == "elephant");
  CHECK(events.back().at("score") == 0.0);
  CHECK(events.back().at("oracle_calls") == 21);

  const Json manifest = Json::parse(ReadWholeFile(out + ".manifest.json"));
  CHECK(manifest.at("counts").at("oracle_calls") == 21);
  CHECK(manifest.at("counts").at("searches") == 1);
}

TEST_CASE("addany aborts cleanly when the oracle cannot score") {
  TempDir dir;
  dir.Write("squad.json", ToySquadJson());
  // No defaults anywhere: the very first call (the initial sentence) throws.
  dir.Write("scores.json", "{}\n");
  dir.Write("common.txt", "cat\n");
  const std::string trace = dir.Path("trace.jsonl");
  const CommandResult result = RunCli(
      "addany " + dir.Path("squad.json") + " " + dir.Path("out.json") +
          " --oracle file:" + dir.Path("scores.json") +
          " --seed 1 --d 2 --epochs 1 --common " + dir.Path("common.txt") +
          " --trace " + trace,
      dir);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("aborted") != std::string::npos);
  // The partial trace is still written for diagnosis.
  CHECK(ReadWholeFile(trace).find("\"event\":\"aborted\"") !=
        std::string::npos);

  CHECK(RunCli("addany " + dir.Path("squad.json") + " " +
                   dir.Path("out.json") +
                   " --oracle http://somewhere --seed 1 --common " +
                   dir.Path("common.txt"),
               dir)
            .exit_code == 2);
}

const char kPerfectPredictions[] =
    R"({"pairID": "id-1", "label": "entailment"}
{"pairID": "id-2", "label": "neutral"}
{"pairID": "id-3", "label": "contradiction"}
)";

const char kStressedPredictions[] =
    R"({"pairID": "id-1", "label": "entailment"}
{"pairID": "id-2", "label": "entailment"}
{"pairID": "id-3", "label": "contradiction"}
)";

TEST_CASE("evaluate scores nli predictions and binds reductions") {
  TempDir dir;
  const std::string data = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  dir.Write("perfect.jsonl", kPerfectPredictions);
  dir.Write("stressed.jsonl", kStressedPredictions);

  const CommandResult original = RunCli(
      "evaluate " + data + " " + dir.Path("perfect.jsonl") +
          " --task nli --out " + dir.Path("original") + " --name dev",
      dir);
  CHECK(original.exit_code == 0);
  CHECK(original.output.find("100.0") != std::string::npos);

  const CommandResult stressed = RunCli(
      "evaluate " + data + " " + dir.Path("stressed.jsonl") +
          " --task nli --original " + dir.Path("original.csv") + " --out " +
          dir.Path("stressed") + " --name word_overlap",
      dir);
  CHECK(stressed.exit_code == 0);
  CHECK(stressed.output.find("66.7") != std::string::npos);
  CHECK(stressed.output.find("(33.3)") != std::string::npos);

  const std::string csv = ReadWholeFile(dir.Path("stressed.csv"));
  CHECK(csv == "dataset,metric,value,reduction,coverage\n"
               "word_overlap,accuracy,66.7,33.3,1.000\n");
}

TEST_CASE("evaluate writes a confusion matrix against gold labels") {
  TempDir dir;
  const std::string data = dir.Path("dev.jsonl");
  dir.Write("dev.jsonl", kNliJsonl);
  dir.Write("preds.jsonl",
            R"({"pairID": "id-1", "label": "entailment"}
{"pairID": "id-2", "label": "contradiction"}
{"pairID": "id-3", "label": "contradiction"}
)");
  const CommandResult result = RunCli(
      "evaluate " + data + " " + dir.Path("preds.jsonl") +
          " --task nli --confusion " + dir.Path("confusion.csv"),
      dir);
  CHECK(result.exit_code == 0);
  CHECK(ReadWholeFile(dir.Path("confusion.csv")) ==
        "# reference: gold, prediction: preds\n"
        "reference,entailment,neutral,contradiction\n"
        "entailment,1,0,0\n"
        "neutral,0,0,1\n"
        "contradiction,0,0,1\n");

  // Predictions-vs-predictions view via --confusion-reference.
  dir.Write("before.jsonl", kPerfectPredictions);
  const CommandResult relative = RunCli(
      "evaluate " + data + " " + dir.Path("preds.jsonl") +
          " --task nli --confusion-reference " + dir.Path("before.jsonl") +
          " --confusion " + dir.Path("relative.csv"),
      dir);
  CHECK(relative.exit_code == 0);
  CHECK(ReadWholeFile(dir.Path("relative.csv"))
            .find("# reference: before, prediction: preds") == 0);
}

TEST_CASE("evaluate rejects confusion for qa and enforces coverage") {
  TempDir dir;
  dir.Write("squad.json", ToySquadJson());
  dir.Write("qa_preds.json", "{\"q1\": \"he\", \"q2\": \"dusk\"}\n");
  const CommandResult qa = RunCli(
      "evaluate " + dir.Path("squad.json") + " " + dir.Path("qa_preds.json") +
          " --task qa --out " + dir.Path("qa_report"),
      dir);
  CHECK(qa.exit_code == 0);
  CHECK(ReadWholeFile(dir.Path("qa_report.csv")) ==
        "dataset,metric,value,reduction,coverage\n"
        "squad,exact_match,50.0,,1.000\n");

  CHECK(RunCli("evaluate " + dir.Path("squad.json") + " " +
                   dir.Path("qa_preds.json") + " --task qa --confusion " +
                   dir.Path("c.csv"),
               dir)
            .exit_code == 2);

  dir.Write("partial.json", "{\"q1\": \"he\"}\n");
  CHECK(RunCli("evaluate " + dir.Path("squad.json") + " " +
                   dir.Path("partial.json") + " --task qa",
               dir)
            .exit_code == 1);
  const CommandResult allowed = RunCli(
      "evaluate " + dir.Path("squad.json") + " " + dir.Path("partial.json") +
          " --task qa --allow-missing --out " + dir.Path("partial_report"),
      dir);
  CHECK(allowed.exit_code == 0);
  CHECK(ReadWholeFile(dir.Path("partial_report.csv")) ==
        "dataset,metric,value,reduction,coverage\n"
        "squad,exact_match,50.0,,0.500\n");
}

TEST_CASE("validate reports counts and rejects broken datasets") {
  TempDir dir;
  dir.Write("dev.jsonl", kNliJsonl);
  const CommandResult ok =
      RunCli("validate " + dir.Path("dev.jsonl") + " --task nli", dir);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("valid: 3 examples") != std::string::npos);

  dir.Write("bad.jsonl",
            R"({"sentence1": "A.", "sentence2": "B.", "gold_label": "sorta", "pairID": "x"})"
            "\n");
  const CommandResult bad =
      RunCli("validate " + dir.Path("bad.jsonl") + " --task nli", dir);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find(":1") != std::string::npos);  // line number

  dir.Write("squad.json", ToySquadJson());
  CHECK(RunCli("validate " + dir.Path("squad.json") + " --task qa", dir)
            .exit_code == 0);

  std::string broken = ToySquadJson();
  const std::size_t at = broken.find("\"answer_start\": 5");
  REQUIRE(at != std::string::npos);
  broken.replace(at, 17, "\"answer_start\": 6");
  dir.Write("broken.json", broken);
  const CommandResult squad_bad =
      RunCli("validate " + dir.Path("broken.json") + " --task qa", dir);
  CHECK(squad_bad.exit_code == 1);
  CHECK(squad_bad.output.find("q1") != std::string::npos);
}

}  // namespace
}  // namespace stresskit
