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

#include "stresskit/rng.h"

#include <stdexcept>

namespace stresskit {

namespace {

inline std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

inline std::uint64_t FnvByte(std::uint64_t hash, unsigned char byte) {
  return (hash ^ byte) * kFnvPrime;
}

inline std::uint64_t FnvU64(std::uint64_t hash, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    hash = FnvByte(hash, static_cast<unsigned char>(value >> (8 * i)));
  }
  return hash;
}

inline std::uint64_t FnvBytes(std::uint64_t hash, std::string_view bytes) {
  // Length prefix keeps ("ab","c") and ("a","bc") distinct.
  hash = FnvU64(hash, bytes.size());
  for (char c : bytes) hash = FnvByte(hash, static_cast<unsigned char>(c));
  return hash;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
  // Canonical seeding: expand the 64-bit seed through splitmix64.
  std::uint64_t sm = seed;
  for (auto& word : state_) word = SplitMix64(sm);
}

std::uint64_t RngStream::NextU64() {
  // xoshiro256**
  const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

std::size_t RngStream::Below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("RngStream::Below: n must be >= 1");
  if (n == 1) return 0;
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = NextU64();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

double RngStream::Unit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

RngStream RngStream::Fork(std::uint64_t index) const {
  std::uint64_t hash = kFnvOffset;
  hash = FnvU64(hash, seed_);
  hash = FnvU64(hash, index);
  return RngStream(hash);
}

std::uint64_t DeriveSeed(std::uint64_t global_seed, std::string_view example_id,
                         std::string_view stream_tag) {
  std::uint64_t hash = kFnvOffset;
  hash = FnvU64(hash, global_seed);
  hash = FnvBytes(hash, example_id);
  hash = FnvBytes(hash, stream_tag);
  return hash;
}

RngStream DeriveRng(std::uint64_t global_seed, std::string_view example_id,
                    std::string_view stream_tag) {
  return RngStream(DeriveSeed(global_seed, example_id, stream_tag));
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = kFnvOffset;
  for (char c : bytes) hash = FnvByte(hash, static_cast<unsigned char>(c));
  return hash;
}

}  // namespace stresskit
