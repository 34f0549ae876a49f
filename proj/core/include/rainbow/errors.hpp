// Copyright 2026 The Rainbow Authors.
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

#ifndef RAINBOW_ERRORS_HPP
#define RAINBOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

// Thrown when a guaranteed property fails at runtime: an augmentation step
// that provably must succeed comes up empty, a decomposition violates its
// own structure theorem, and so on. Reaching this is a bug (or a very
// interesting counterexample), never a recoverable input condition.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

// Parse failure for the text instance formats. Carries the 1-based input
// line on which the problem was detected (0 if not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rainbow

#endif  // RAINBOW_ERRORS_HPP
