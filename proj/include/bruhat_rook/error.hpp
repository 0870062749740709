#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat_rook {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (permutation words, board text, polynomial JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An integer argument outside the domain of the operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Two operands whose sizes or dimensions must agree do not.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A board lacks the shape an operation requires (square, Ferrers, even size).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition on the arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedArgument : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Raised when a permutation contains one of the forbidden hull patterns.
// Carries the offending pattern and the 1-based positions of one occurrence.
class PatternViolation : public Error {
 public:
  PatternViolation(std::string what, std::string subject, std::string pattern,
                   std::vector<int> positions)
      : Error(std::move(what)),
        subject_(std::move(subject)),
        pattern_(std::move(pattern)),
        positions_(std::move(positions)) {}

  // Which argument failed, e.g. "w" or "flip_ud(u)".
  const std::string& subject() const noexcept { return subject_; }
  const std::string& pattern() const noexcept { return pattern_; }
  const std::vector<int>& positions() const noexcept { return positions_; }

 private:
  std::string subject_;
  std::string pattern_;
  std::vector<int> positions_;
};

}  // namespace bruhat_rook
