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

#include <algorithm>
#include <array>
#include <string_view>

namespace stresskit {

namespace {

constexpr std::array<std::string_view, 3> kRows = {"qwertyuiop", "asdfghjkl",
                                                   "zxcvbnm"};

struct KeyPosition {
  int row;
  int index;
};

bool FindKey(char ch, KeyPosition* pos) {
  for (int r = 0; r < 3; ++r) {
    const std::size_t i = kRows[r].find(ch);
    if (i != std::string_view::npos) {
      *pos = {r, static_cast<int>(i)};
      return true;
    }
  }
  return false;
}

void AddIfValid(int row, int index, std::string& out) {
  if (row < 0 || row >= 3) return;
  if (index < 0 || index >= static_cast<int>(kRows[row].size())) return;
  out.push_back(kRows[row][index]);
}

std::string LowercaseNeighbors(char ch) {
  KeyPosition pos;
  if (!FindKey(ch, &pos)) return {};
  std::string out;
  AddIfValid(pos.row, pos.index - 1, out);
  AddIfValid(pos.row, pos.index + 1, out);
  // Row below: stagger shifts left (indices i-1, i); row above is the
  // mirror image (indices i, i+1), which makes the relation symmetric.
  AddIfValid(pos.row + 1, pos.index - 1, out);
  AddIfValid(pos.row + 1, pos.index, out);
  AddIfValid(pos.row - 1, pos.index, out);
  AddIfValid(pos.row - 1, pos.index + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::u32string KeyboardNeighbors(char32_t ch) {
  bool upper = false;
  char32_t base = ch;
  if (ch >= U'A' && ch <= U'Z') {
    upper = true;
    base = ch - U'A' + U'a';
  }
  if (base < U'a' || base > U'z') return {};
  const std::string neighbors = LowercaseNeighbors(static_cast<char>(base));
  std::u32string out;
  out.reserve(neighbors.size());
  for (char c : neighbors) {
    char32_t cp = static_cast<char32_t>(c);
    if (upper) cp = cp - U'a' + U'A';
    out.push_back(cp);
  }
  return out;
}

}  // namespace stresskit
