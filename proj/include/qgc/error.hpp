#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem or stream failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A key file that cannot be decoded (bad magic, truncation, bad ranges).
class KeyFormatError : public Error {
 public:
  using Error::Error;
};

/// A PPM/PGM payload that cannot be decoded.
class ImageFormatError : public Error {
 public:
  using Error::Error;
};

/// Semantically invalid input: a non-Latin table, out-of-range key field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgc
