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

#ifndef STRESSKIT_UNICODE_H_
#define STRESSKIT_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace stresskit {

// Text enters and leaves the toolkit as UTF-8. All offsets (answer spans,
// word spans, offset maps) count Unicode scalar values, so perturbation code
// works on decoded std::u32string and re-encodes at the boundary.

// Decodes UTF-8 into a sequence of Unicode scalar values. Throws ParseError
// on malformed input (overlong forms, surrogates, truncated sequences).
std::u32string DecodeUtf8(std::string_view utf8);

std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t codepoint);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t ScalarLength(std::string_view utf8);

// True for the Unicode general categories Lu, Ll, Lt, Lm, Lo.
bool IsLetter(char32_t codepoint);

// Single-code-point case mappings (length-preserving; multi-character full
// mappings are not applied). Characters with no mapping pass through.
char32_t ToLowerChar(char32_t codepoint);
char32_t ToUpperChar(char32_t codepoint);

// True iff the character changes under ToLowerChar, i.e. it is cased and
// currently in uppercase (or titlecase) form.
bool IsUpperChar(char32_t codepoint);

std::u32string ToLower(std::u32string_view text);
std::string ToLowerUtf8(std::string_view utf8);

}  // namespace stresskit

#endif  // STRESSKIT_UNICODE_H_
