// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablek {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed program, CNF or formula text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive routine refused an instance above its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Structural violation, e.g. a formula that is not in alternating form.
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace stablek
