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

#include "stresskit/keyboard.h"

#include <string>

#include "doctest.h"

namespace stresskit {
namespace {

std::string Ascii(const std::u32string& chars) {
  std::string out;
  for (const char32_t c : chars) out += static_cast<char>(c);
  return out;
}

TEST_CASE("the full adjacency table matches the stagger geometry") {
  // Expected sets worked out by hand from the three rows
  //   qwertyuiop / asdfghjkl / zxcvbnm
  // with horizontal neighbors i-1, i+1 and staggered vertical neighbors
  // (below-row keys i-1 and i; mirrored above). Sorted ascending.
  const struct {
    char key;
    const char* neighbors;
  } kExpected[] = {
      {'a', "qswz"},   {'b', "ghnv"},   {'c', "dfvx"},  {'d', "cefrsx"},
      {'e', "drsw"},   {'f', "cdgrtv"}, {'g', "bfhtvy"}, {'h', "bgjnuy"},
      {'i', "jkou"},   {'j', "hikmnu"}, {'k', "ijlmo"}, {'l', "kop"},
      {'m', "jkn"},    {'n', "bhjm"},   {'o', "iklp"},  {'p', "lo"},
      {'q', "aw"},     {'r', "deft"},   {'s', "adewxz"}, {'t', "fgry"},
      {'u', "hijy"},   {'v', "bcfg"},   {'w', "aeqs"},  {'x', "cdsz"},
      {'y', "ghtu"},   {'z', "asx"},
  };
  for (const auto& row : kExpected) {
    CHECK(Ascii(KeyboardNeighbors(static_cast<char32_t>(row.key))) ==
          row.neighbors);
  }
}

TEST_CASE("adjacency is symmetric") {
  for (char a = 'a'; a <= 'z'; ++a) {
    const std::u32string neighbors =
        KeyboardNeighbors(static_cast<char32_t>(a));
    for (const char32_t b : neighbors) {
      const std::u32string back = KeyboardNeighbors(b);
      CHECK(back.find(static_cast<char32_t>(a)) != std::u32string::npos);
    }
  }
}

TEST_CASE("no key is its own neighbor and results are sorted") {
  for (char a = 'a'; a <= 'z'; ++a) {
    const std::u32string neighbors =
        KeyboardNeighbors(static_cast<char32_t>(a));
    CHECK(neighbors.find(static_cast<char32_t>(a)) == std::u32string::npos);
    for (std::size_t i = 1; i < neighbors.size(); ++i) {
      CHECK(neighbors[i - 1] < neighbors[i]);
    }
  }
}

TEST_CASE("uppercase keys map through lowercase and return uppercase") {
  CHECK(Ascii(KeyboardNeighbors(U'Q')) == "AW");
  CHECK(Ascii(KeyboardNeighbors(U'E')) == "DRSW");
}

TEST_CASE("non-letters and non-ASCII letters have no neighbors") {
  CHECK(KeyboardNeighbors(U'7').empty());
  CHECK(KeyboardNeighbors(U' ').empty());
  CHECK(KeyboardNeighbors(U'.').empty());
  CHECK(KeyboardNeighbors(U'é').empty());
  CHECK(KeyboardNeighbors(U'Ж').empty());
}

}  // namespace
}  // namespace stresskit
