// Copyright 2026 The forcelab Authors
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

#ifndef FORCELAB_ERRORS_HPP_
#define FORCELAB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forcelab {

// Malformed graph text. `offset` is the byte offset into the input where the
// problem was detected; `line` is 1-based and 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what + " (byte " + std::to_string(offset) +
                           (line ? ", line " + std::to_string(line) : "") +
                           ")"),
        message_(what),
        offset_(offset),
        line_(line) {}

  // Description without the position suffix.
  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::size_t line_;
};

// Arguments outside an operation's domain (odd order, out-of-range
// parameters, missing perfect matching, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller broke an operation's precondition (e.g. passed a matching that is
// not perfect in the given graph).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration exceeded its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MatchingOverflow : public CapExceeded {
 public:
  explicit MatchingOverflow(std::size_t cap)
      : CapExceeded("matching overflow: more than " + std::to_string(cap) +
                    " perfect matchings") {}
};

class CycleOverflow : public CapExceeded {
 public:
  explicit CycleOverflow(std::size_t cap)
      : CapExceeded("cycle overflow: more than " + std::to_string(cap) +
                    " alternating cycles") {}
};

}  // namespace forcelab

#endif  // FORCELAB_ERRORS_HPP_
