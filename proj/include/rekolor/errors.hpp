// Copyright 2026 The rekolor Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rekolor {

// Base class for everything thrown on purpose by this library.
class rekolor_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us data that violates a documented precondition
// (improper coloring, palette out of range, malformed decomposition, ...).
class input_error : public rekolor_error {
 public:
  using rekolor_error::rekolor_error;
};

// A file or stream could not be parsed. `line` is 1-based, 0 if unknown.
class parse_error : public rekolor_error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
      : rekolor_error(line ? what + " (line " + std::to_string(line) + ")"
                           : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An exact computation would exceed its guard (state limit, subset DP
// size, search depth). Raise the guard explicitly to proceed.
class resource_error : public rekolor_error {
 public:
  using rekolor_error::rekolor_error;
};

// A recoloring sequence failed validation. `step` is the 0-based index of
// the offending step, or npos when the start coloring itself is bad.
class validation_error : public rekolor_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  validation_error(const std::string& what, std::size_t step)
      : rekolor_error(step == npos
                          ? what + " (start coloring)"
                          : what + " (step " + std::to_string(step) + ")"),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// An internal invariant failed. Always a bug; never catch and continue.
class invariant_violation : public rekolor_error {
 public:
  using rekolor_error::rekolor_error;
};

namespace detail {
inline void check_invariant(bool ok, const char* msg) {
  if (!ok) throw invariant_violation(std::string("invariant violated: ") + msg);
}
}  // namespace detail

}  // namespace rekolor
