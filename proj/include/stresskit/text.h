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

#ifndef STRESSKIT_TEXT_H_
#define STRESSKIT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stresskit {

// A maximal run of Unicode letters. Offsets count Unicode scalar values into
// the source text; end is exclusive. Digits, apostrophes, and hyphens are
// word breaks, so "Rus'" yields the span "Rus".
struct WordSpan {
  std::size_t begin;
  std::size_t end;

  std::size_t length() const { return end - begin; }
  bool operator==(const WordSpan&) const = default;
};

// Word spans of `text`, in order. Concatenating gaps and spans reconstructs
// the input exactly.
std::vector<WordSpan> TokenizeWords(std::u32string_view text);

// Convenience over UTF-8 input: the extracted words, re-encoded.
std::vector<std::string> TokenizeWordsUtf8(std::string_view utf8);

// Character-offset correspondence between an original text and a transformed
// one. Segments record replaced stretches (typically word spans); characters
// between segments are assumed copied verbatim, shifted by the cumulative
// length difference of the segments before them.
class OffsetMap {
 public:
  struct Segment {
    std::size_t orig_start;
    std::size_t orig_len;
    std::size_t new_start;
    std::size_t new_len;
  };

  // An identity map with no recorded length bound.
  OffsetMap() = default;

  // Identity map over a text of `length` characters.
  static OffsetMap Identity(std::size_t length);

  // Appends a replaced segment. Segments must be added left to right,
  // non-overlapping, and consistent with the cumulative shift (throws
  // ValidationError otherwise).
  void AddSegment(std::size_t orig_start, std::size_t orig_len,
                  std::size_t new_len);

  // Declares the total original length; offsets past it become errors.
  void set_original_length(std::size_t length);

  // Maps an original offset to the transformed text. Monotone
  // non-decreasing; boundary offsets (segment starts, text end) map exactly.
  // Offsets interior to a replaced segment map to the corresponding position
  // in the replacement, clamped to its length.
  std::size_t Map(std::size_t orig_offset) const;

  bool IsIdentity() const;
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
  bool has_length_ = false;
  std::size_t original_length_ = 0;
};

}  // namespace stresskit

#endif  // STRESSKIT_TEXT_H_
