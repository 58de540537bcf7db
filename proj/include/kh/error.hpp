#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kh {

// Base class for every error raised by the library. The CLI maps all of
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed notation text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structurally invalid diagram or notation value (label counts, open strands, ...).
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (zero determinant, bound exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// scaled_inverse produced a non-integral entry.
class NonIntegralError : public DomainError {
 public:
  NonIntegralError(const std::string& what, std::size_t row, std::size_t col)
      : DomainError(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace kh
