// Copyright 2026 The evkit Authors
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

#ifndef EVKIT_ERROR_HPP
#define EVKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evkit
{
/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, const std::string & what)
  : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Binary container problems: bad magic, truncation, checksum mismatch.
class FormatError : public Error
{
public:
  using Error::Error;
};

/// ln() or division outside its domain at a specific pixel.
class DomainError : public Error
{
public:
  DomainError(std::size_t x, std::size_t y, const std::string & what)
  : Error(what + " at pixel (" + std::to_string(x) + ", " + std::to_string(y) + ")"), x_(x), y_(y)
  {
  }
  std::size_t x() const { return x_; }
  std::size_t y() const { return y_; }

private:
  std::size_t x_;
  std::size_t y_;
};

}  // namespace evkit
#endif  // EVKIT_ERROR_HPP
