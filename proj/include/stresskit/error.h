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

#ifndef STRESSKIT_ERROR_H_
#define STRESSKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace stresskit {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Raised when an input file cannot be parsed (syntax, schema, bad tokens).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(message) {}
};

// Raised when parsed data violates a dataset invariant (offsets, duplicate
// ids, unknown labels) or when a caller breaks an operation contract.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

}  // namespace stresskit

#endif  // STRESSKIT_ERROR_H_
