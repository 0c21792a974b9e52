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

#include "stresskit/text.h"

#include "stresskit/error.h"
#include "stresskit/unicode.h"

namespace stresskit {

std::vector<WordSpan> TokenizeWords(std::u32string_view text) {
  std::vector<WordSpan> spans;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!IsLetter(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < n && IsLetter(text[i])) ++i;
    spans.push_back(WordSpan{begin, i});
  }
  return spans;
}

std::vector<std::string> TokenizeWordsUtf8(std::string_view utf8) {
  const std::u32string text = DecodeUtf8(utf8);
  std::vector<std::string> words;
  for (const WordSpan& span : TokenizeWords(text)) {
    words.push_back(EncodeUtf8(
        std::u32string_view(text).substr(span.begin, span.length())));
  }
  return words;
}

OffsetMap OffsetMap::Identity(std::size_t length) {
  OffsetMap map;
  map.set_original_length(length);
  return map;
}

void OffsetMap::set_original_length(std::size_t length) {
  if (!segments_.empty()) {
    const Segment& last = segments_.back();
    if (last.orig_start + last.orig_len > length) {
      throw ValidationError("OffsetMap: declared length cuts a segment");
    }
  }
  has_length_ = true;
  original_length_ = length;
}

void OffsetMap::AddSegment(std::size_t orig_start, std::size_t orig_len,
                           std::size_t new_len) {
  std::size_t shift_before = 0;
  if (!segments_.empty()) {
    const Segment& last = segments_.back();
    if (orig_start < last.orig_start + last.orig_len) {
      throw ValidationError("OffsetMap: segments must be ordered and disjoint");
    }
    shift_before = (last.new_start + last.new_len) -
                   (last.orig_start + last.orig_len);
  }
  segments_.push_back(
      Segment{orig_start, orig_len, orig_start + shift_before, new_len});
}

std::size_t OffsetMap::Map(std::size_t orig_offset) const {
  if (has_length_ && orig_offset > original_length_) {
    throw ValidationError("OffsetMap: offset " + std::to_string(orig_offset) +
                          " out of range (length " +
                          std::to_string(original_length_) + ")");
  }
  std::size_t shift_minus = 0;  // accumulated (orig_len - new_len)
  std::size_t shift_plus = 0;   // accumulated (new_len - orig_len)
  for (const Segment& seg : segments_) {
    if (orig_offset < seg.orig_start) break;
    if (orig_offset < seg.orig_start + seg.orig_len) {
      const std::size_t within = orig_offset - seg.orig_start;
      return seg.new_start + std::min(within, seg.new_len);
    }
    if (seg.orig_len >= seg.new_len) {
      shift_minus += seg.orig_len - seg.new_len;
    } else {
      shift_plus += seg.new_len - seg.orig_len;
    }
  }
  return orig_offset + shift_plus - shift_minus;
}

bool OffsetMap::IsIdentity() const {
  for (const Segment& seg : segments_) {
    if (seg.orig_len != seg.new_len || seg.orig_start != seg.new_start) {
      return false;
    }
  }
  return true;
}

}  // namespace stresskit
