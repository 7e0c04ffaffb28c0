#pragma once

#include <stdexcept>
#include <string>

namespace rfg {

// Base of every error thrown by the library. Callers that only care about
// "bad input vs. everything else" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different alphabets, or words/series with mismatched
// degree bounds.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments failed (out-of-range parameter, missing
// image, empty index set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (word grammar, presentation files, spec files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rfg
