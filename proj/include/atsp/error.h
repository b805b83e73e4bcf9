#pragma once

#include <stdexcept>
#include <string>

namespace atsp {

// Root of every error raised by the library. Callers that only care about
// "did it work" can catch this; the CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A region violates its shape invariants (empty point list, radius <= 0, ...).
class InvalidRegion : public Error {
 public:
  using Error::Error;
};

// An instance cannot be evaluated (too few regions, empty candidate set).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A size guard of an exponential algorithm was exceeded.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Malformed instance file. The message names the offending line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class UnsupportedKind : public ParseError {
 public:
  using ParseError::ParseError;
};

// Rejection sampling could not place disjoint disks in the requested box.
class PackingTooDense : public Error {
 public:
  using Error::Error;
};

}  // namespace atsp
