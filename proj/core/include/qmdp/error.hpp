#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmdp {

/** Base class of every error thrown by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed input text. Carries the 1-based line number (0 when unknown). */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/** An Mdp or objective that violates a structural invariant. */
class ModelError : public Error {
 public:
  using Error::Error;
};

/** An objective/mode/model combination no solver handles. */
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/** An operation called outside its documented precondition. */
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/** An internal invariant check failed. Always a bug. */
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmdp
