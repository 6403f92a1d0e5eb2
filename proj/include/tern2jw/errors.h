// Copyright 2026 The tern2jw Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tern2jw {

/// A qubit count or matrix size outside the supported range.
class SizeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A qubit index outside 1..m, or an unknown qubit id.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : std::invalid_argument(format(message, line, column)), line_(line), column_(column) {
    }

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

  private:
    static std::string format(const std::string &message, std::size_t line, std::size_t column) {
        if (line == 0) {
            return column == 0 ? message : "position " + std::to_string(column) + ": " + message;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// A tree rewrite was requested on a tree that does not have the required shape.
class StructureError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Always a library bug.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace tern2jw
