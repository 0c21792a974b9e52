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

#include "stresskit/unicode.h"

#include <algorithm>

#include "stresskit/error.h"
#include "stresskit/internal/unicode_tables.h"

namespace stresskit {

namespace {

[[noreturn]] void ThrowBadUtf8(std::size_t byte_offset) {
  throw ParseError("invalid UTF-8 at byte offset " +
                   std::to_string(byte_offset));
}

char32_t LookupCase(const internal::CaseMapping* table, std::size_t size,
                    char32_t codepoint) {
  const internal::CaseMapping* end = table + size;
  const internal::CaseMapping* it = std::lower_bound(
      table, end, codepoint,
      [](const internal::CaseMapping& m, char32_t cp) { return m.from < cp; });
  if (it != end && it->from == codepoint) return it->to;
  return codepoint;
}

}  // namespace

std::u32string DecodeUtf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  const std::size_t n = utf8.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    char32_t cp;
    std::size_t len;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      ThrowBadUtf8(i);
    }
    if (i + len > n) ThrowBadUtf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(utf8[i + k]);
      if ((bk & 0xC0) != 0x80) ThrowBadUtf8(i);
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      ThrowBadUtf8(i);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += EncodeUtf8(cp);
  return out;
}

std::size_t ScalarLength(std::string_view utf8) {
  std::size_t count = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

bool IsLetter(char32_t codepoint) {
  const internal::CodepointRange* end =
      internal::kLetterRanges + internal::kNumLetterRanges;
  const internal::CodepointRange* it =
      std::upper_bound(internal::kLetterRanges, end, codepoint,
                       [](char32_t cp, const internal::CodepointRange& r) {
                         return cp < r.lo;
                       });
  return it != internal::kLetterRanges && codepoint <= (it - 1)->hi;
}

char32_t ToLowerChar(char32_t codepoint) {
  return LookupCase(internal::kLowercaseMappings,
                    internal::kNumLowercaseMappings, codepoint);
}

char32_t ToUpperChar(char32_t codepoint) {
  return LookupCase(internal::kUppercaseMappings,
                    internal::kNumUppercaseMappings, codepoint);
}

bool IsUpperChar(char32_t codepoint) {
  return ToLowerChar(codepoint) != codepoint;
}

std::u32string ToLower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = ToLowerChar(cp);
  return out;
}

std::string ToLowerUtf8(std::string_view utf8) {
  return EncodeUtf8(ToLower(DecodeUtf8(utf8)));
}

}  // namespace stresskit
