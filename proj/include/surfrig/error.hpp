// Copyright 2026 The surfrig Authors.
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

#ifndef SURFRIG_ERROR_HPP
#define SURFRIG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfrig {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter or operand violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A point sits where the induced surface or the tangency rows degenerate
// (on the z-axis, at the origin, at a cone apex, or off its surface).
class DegenerateConfiguration : public Error {
 public:
  DegenerateConfiguration(std::size_t vertex, const std::string& what)
      : Error("vertex " + std::to_string(vertex) + ": " + what),
        vertex_(vertex) {}

  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

// The request is outside what the surface kind or backend supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A randomized search ran out of attempts.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace surfrig

#endif  // SURFRIG_ERROR_HPP
