#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical input failed (non-square determinant,
// word outside a kernel, even pretzel parameter, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The implementation contradicted itself; never the user's fault.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pretzel
