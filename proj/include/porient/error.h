// Copyright 2026 The porient Authors
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

#ifndef PORIENT_ERROR_H_
#define PORIENT_ERROR_H_

#include <stdexcept>
#include <string>

namespace porient {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. line() is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A mathematical precondition of an operation does not hold. The message
// names the violated inequality or structural condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A self-check on a produced object failed. Never expected; signals a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// An exact oracle refused an instance larger than its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace porient

#endif  // PORIENT_ERROR_H_
