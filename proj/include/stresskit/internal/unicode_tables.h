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

#ifndef STRESSKIT_INTERNAL_UNICODE_TABLES_H_
#define STRESSKIT_INTERNAL_UNICODE_TABLES_H_

#include <cstddef>
#include <cstdint>

namespace stresskit {
namespace internal {

struct CodepointRange {
  char32_t lo;
  char32_t hi;  // inclusive
};

struct CaseMapping {
  char32_t from;
  char32_t to;
};

// Sorted by lo / from; binary-searchable.
extern const CodepointRange kLetterRanges[];
extern const std::size_t kNumLetterRanges;
extern const CaseMapping kLowercaseMappings[];
extern const std::size_t kNumLowercaseMappings;
extern const CaseMapping kUppercaseMappings[];
extern const std::size_t kNumUppercaseMappings;

}  // namespace internal
}  // namespace stresskit

#endif  // STRESSKIT_INTERNAL_UNICODE_TABLES_H_
