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

#ifndef STRESSKIT_MANIFEST_H_
#define STRESSKIT_MANIFEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stresskit {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Sidecar written next to every generated dataset: enough to re-run the
// command and audit what it produced. Deliberately timestamp-free so
// identical runs give byte-identical manifests.
struct RunManifest {
  std::string command;
  std::vector<std::string> args;  // raw argv tail, in order
  std::vector<std::pair<std::string, std::string>> inputs;   // label -> path
  std::vector<std::pair<std::string, std::string>> outputs;  // label -> path
  std::optional<std::uint64_t> seed;
  std::string version = std::string(kToolVersion);
  std::vector<std::pair<std::string, std::uint64_t>> counts;  // label -> n
};

// JSON object {command, args, inputs, outputs, seed?, version, counts}.
std::string RenderManifest(const RunManifest& manifest);

// Atomic write of RenderManifest plus a trailing newline.
void WriteManifest(const RunManifest& manifest, const std::string& path);

}  // namespace stresskit

#endif  // STRESSKIT_MANIFEST_H_
