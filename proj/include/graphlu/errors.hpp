// Copyright 2026 The graphlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace graphlu {

// Bad input: precondition violations, malformed multisets, mismatched sizes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6, JSON or constraint files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration cap or node budget was exceeded. Never a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constrained solving on graphs without an even-degree vertex, with every
// fallback exhausted.
class ClassAlphaUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphlu
