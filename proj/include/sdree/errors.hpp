#pragma once

#include <stdexcept>

namespace sdree {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key validation failures.
class EmptyKeyError : public Error {
 public:
  using Error::Error;
};

class KeyTooLongError : public Error {
 public:
  using Error::Error;
};

// The digit sum of the key checksum came out zero, which leaves no usable
// code value. Unreachable for non-empty keys; kept as a loud failure.
class DegenerateKeyError : public Error {
 public:
  using Error::Error;
};

// Prime index outside [1, kMaxPrimeIndex].
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// A statistic was requested on an input shorter than its minimum length.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Malformed hex or base64 input.
class CodecError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdree
