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

#ifndef STRESSKIT_KEYBOARD_H_
#define STRESSKIT_KEYBOARD_H_

#include <string>

namespace stresskit {

// QWERTY letter adjacency. Rows "qwertyuiop" / "asdfghjkl" / "zxcvbnm"; a
// key is adjacent to its horizontal neighbors and, through the standard
// stagger, to the keys at indices i-1 and i in the row below (equivalently
// i and i+1 in the row above). The relation is symmetric.
//
// Returns neighbors in ascending character order. Uppercase letters map
// through lowercase and the result is re-uppercased; anything that is not
// an ASCII letter has no neighbors.
std::u32string KeyboardNeighbors(char32_t ch);

}  // namespace stresskit

#endif  // STRESSKIT_KEYBOARD_H_
