#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace lexis {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed us data that violates a documented precondition
/// (unsorted word list, duplicate key, malformed class file, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A serialized artifact (binary automaton, JSON model) cannot be decoded.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class... Ts>
std::string msg(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace detail

}  // namespace lexis
