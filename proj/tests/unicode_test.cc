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

#include <string>

#include "doctest.h"
#include "stresskit/error.h"

namespace stresskit {
namespace {

TEST_CASE("round-trips ASCII and multibyte text") {
  const std::string samples[] = {
      "",
      "Then he ran.",
      "naïve café",                  // 2-byte sequences
      "Жизнь",        // Cyrillic
      "ありがとう",        // 3-byte sequences
      "\U0001F600 ok \U0001D11E",              // 4-byte sequences
  };
  for (const std::string& sample : samples) {
    CHECK(EncodeUtf8(DecodeUtf8(sample)) == sample);
  }
}

TEST_CASE("ScalarLength counts scalar values, not bytes") {
  CHECK(ScalarLength("") == 0);
  CHECK(ScalarLength("abc") == 3);
  CHECK(ScalarLength("naïve") == 5);
  CHECK(ScalarLength("\U0001F600") == 1);
}

TEST_CASE("malformed UTF-8 is rejected with a ParseError") {
  CHECK_THROWS_AS(DecodeUtf8(std::string("\xC0\xAF")), ParseError);   // overlong
  CHECK_THROWS_AS(DecodeUtf8(std::string("\xED\xA0\x80")), ParseError);  // surrogate
  CHECK_THROWS_AS(DecodeUtf8(std::string("\xC3")), ParseError);       // truncated
  CHECK_THROWS_AS(DecodeUtf8(std::string("abc\x80")), ParseError);    // stray tail
  CHECK_THROWS_AS(DecodeUtf8(std::string("\xF8\x88\x80\x80\x80")), ParseError);
}

TEST_CASE("the error names the byte offset") {
  try {
    DecodeUtf8(std::string("ab\xC3"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("IsLetter spans scripts and rejects digits and punctuation") {
  CHECK(IsLetter(U'a'));
  CHECK(IsLetter(U'Z'));
  CHECK(IsLetter(U'é'));  // é
  CHECK(IsLetter(U'Ж'));  // Ж
  CHECK(IsLetter(U'中'));  // CJK
  CHECK_FALSE(IsLetter(U'7'));
  CHECK_FALSE(IsLetter(U' '));
  CHECK_FALSE(IsLetter(U'.'));
  CHECK_FALSE(IsLetter(U'\''));
  CHECK_FALSE(IsLetter(U'-'));
  CHECK_FALSE(IsLetter(U'_'));
  CHECK_FALSE(IsLetter(U'·'));
}

TEST_CASE("simple case mappings cover Latin and Cyrillic") {
  CHECK(ToLowerChar(U'A') == U'a');
  CHECK(ToLowerChar(U'É') == U'é');  // É -> é
  CHECK(ToLowerChar(U'Ж') == U'ж');  // Ж -> ж
  CHECK(ToUpperChar(U'a') == U'A');
  CHECK(ToUpperChar(U'é') == U'É');
  CHECK(ToUpperChar(U'ж') == U'Ж');
  CHECK(ToLowerChar(U'7') == U'7');
  CHECK(ToLowerChar(U'a') == U'a');
}

TEST_CASE("case ops are length-preserving by construction") {
  // ß upper-cases to "SS" only under full case mapping; the simple mapping
  // used here must leave it alone.
  CHECK(ToUpperChar(U'ß') == U'ß');
}

TEST_CASE("IsUpperChar agrees with the lowercase table") {
  CHECK(IsUpperChar(U'A'));
  CHECK(IsUpperChar(U'Ж'));
  CHECK_FALSE(IsUpperChar(U'a'));
  CHECK_FALSE(IsUpperChar(U'7'));
}

TEST_CASE("ToLowerUtf8 lowercases whole strings") {
  CHECK(ToLowerUtf8("Because") == "because");
  CHECK(ToLowerUtf8("ÄØŽ") == "äøž");
  CHECK(ToLowerUtf8("MIT 2026!") == "mit 2026!");
}

}  // namespace
}  // namespace stresskit
