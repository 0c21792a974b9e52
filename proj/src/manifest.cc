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

#include "stresskit/manifest.h"

#include "json.hpp"
#include "stresskit/corpus_io.h"

namespace stresskit {

std::string RenderManifest(const RunManifest& manifest) {
  nlohmann::ordered_json json;
  json["command"] = manifest.command;
  json["args"] = manifest.args;
  json["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [label, path] : manifest.inputs) json["inputs"][label] = path;
  json["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [label, path] : manifest.outputs) {
    json["outputs"][label] = path;
  }
  if (manifest.seed) json["seed"] = *manifest.seed;
  json["version"] = manifest.version;
  json["counts"] = nlohmann::ordered_json::object();
  for (const auto& [label, n] : manifest.counts) json["counts"][label] = n;
  return json.dump(2);
}

void WriteManifest(const RunManifest& manifest, const std::string& path) {
  WriteFileAtomic(path, RenderManifest(manifest) + "\n");
}

}  // namespace stresskit
