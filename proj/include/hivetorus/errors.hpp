// SPDX-License-Identifier: MIT
// Error types shared by every module of the hivetorus library.
#pragma once

#include <stdexcept>
#include <string>

namespace hivetorus {

// Base class so callers can catch any library error in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values: sizes, bounds, partitions, malformed boundaries.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Inputs whose shapes do not agree (field length versus grid size and so on).
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on numerical state was violated (infeasible point, zero
// direction, nonzero mean where zero mean is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not produce a trustworthy answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hivetorus
