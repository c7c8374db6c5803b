#ifndef HHRES_ERROR_HPP
#define HHRES_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape mismatches, unknown variables, bad file contents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression or literal, with a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hhres

#endif  // HHRES_ERROR_HPP
