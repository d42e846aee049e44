#pragma once

#include <stdexcept>
#include <string>

namespace oddsigma {

// Base for every domain error raised by the library. CLI maps all of them to
// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value does not fit the fixed-width integer type in use.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Index outside the range a table was built for.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Polygonal order below 3, or otherwise invalid parameters.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// The convolution over P_m has infinite support (m = 1 or m = 2).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Two witness indices give different required residues.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace oddsigma
