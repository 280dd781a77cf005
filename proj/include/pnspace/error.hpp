/*
 * Copyright 2026 The pnspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PNSPACE_ERROR_HPP
#define PNSPACE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pns {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  unsupported = 3,
  inconclusive = 4,
  io = 5,
};

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what)
      : Error(ErrorCode::unsupported, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

/// Parse failure; `line()` is 1-based, 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse,
              line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// Message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// A search or sampling schedule ran out before reaching a verdict.
/// The best candidate found so far travels with the exception.
template <typename Best>
class Inconclusive : public Error {
 public:
  Inconclusive(const std::string& what, Best best)
      : Error(ErrorCode::inconclusive, what), best_(std::move(best)) {}

  const Best& best() const noexcept { return best_; }

 private:
  Best best_;
};

}  // namespace pns

#endif  // PNSPACE_ERROR_HPP
