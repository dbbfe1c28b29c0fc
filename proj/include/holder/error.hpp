#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holder {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation left the real domain (ln/sqrt of a negative, division by zero,
/// 0^negative, overflow or NaN).
class DomainError : public Error {
 public:
  DomainError(double x, const std::string& what);

  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// A precondition on an argument or a constructed value does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace holder
