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

#ifndef HRNORM_ERRORS_HPP
#define HRNORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrnorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is not valid UTF-8; offset points at the offending byte.
class EncodingError : public Error {
 public:
  EncodingError(std::size_t byte_offset, const std::string& what)
      : Error(what + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Data file failed to parse; carries file, line and column.
class LoadError : public Error {
 public:
  LoadError(std::string file, std::size_t line, std::size_t column,
            const std::string& what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + what),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

/// Number outside the supported magnitude bound.
class MagnitudeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MalformedDateError : public DomainError {
 public:
  using DomainError::DomainError;
};

class MalformedTimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Letter has no entry in the spoken-name table.
class SpellError : public Error {
 public:
  using Error::Error;
};

/// Word sequence is not one the speller produces.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A component received input an earlier stage should have rejected.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hrnorm

#endif  // HRNORM_ERRORS_HPP
