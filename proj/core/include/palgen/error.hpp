#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palgen {

// Base of every error raised by the library. Callers that only care about
// "something was wrong with the input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that is not a word. `index` is the 1-based position of the first bad
// character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Operation is only defined on binary words (or on some other restricted
// family) and got something else.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation is undefined for this particular input, e.g. borders of the empty
// word.
class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Generator set and word disagree on length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A resource guard (length bound, iteration bound) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace palgen
