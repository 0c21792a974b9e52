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

#ifndef STRESSKIT_RNG_H_
#define STRESSKIT_RNG_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace stresskit {

// Deterministic pseudo-random stream: xoshiro256** seeded through splitmix64.
// The generator is fixed by this project (not delegated to <random>
// distributions) so that identical seeds draw identical sequences on every
// platform and toolchain. Streams for individual examples are derived from
// (global_seed, example_id, stream_tag) via a stable byte-level hash, which
// makes outputs independent of processing order and safe to produce in
// parallel.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t NextU64();

  // Uniform draw from [0, n). n must be >= 1.
  std::size_t Below(std::size_t n);

  // Uniform double in [0, 1), 53-bit resolution.
  double Unit();

  // Fisher-Yates shuffle, driven by Below().
  template <typename Container>
  void Shuffle(Container& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = Below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // A child stream keyed on this stream's seed and an index. Derivation uses
  // the seed, not the current state, so forks are insensitive to how many
  // draws the parent has made.
  RngStream Fork(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

// Stable 64-bit hash of (global_seed, example_id, stream_tag); FNV-1a over
// the length-prefixed byte encoding of the tuple.
std::uint64_t DeriveSeed(std::uint64_t global_seed, std::string_view example_id,
                         std::string_view stream_tag);

RngStream DeriveRng(std::uint64_t global_seed, std::string_view example_id,
                    std::string_view stream_tag);

// FNV-1a 64-bit over raw bytes. Also used to key file-backed oracle entries
// by sentence content.
std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace stresskit

#endif  // STRESSKIT_RNG_H_
