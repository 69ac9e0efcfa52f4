// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace orlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: malformed sequences, out-of-range parameters, wrong model.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the enumeration or encoding capacity.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An operation needs the elements of a level that is not enumerable.
class EnumerationError : public Error {
 public:
  using Error::Error;
};

/// Norm solvers need a finite, continuous, strictly increasing Young function.
class UnsupportedYoungError : public Error {
 public:
  using Error::Error;
};

class ChainMismatchError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace orlab
