#pragma once

#include <stdexcept>
#include <string>

namespace ngo {

// Base class for every domain error raised by the library. The CLI maps
// these to exit status 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (e.g. b1 of a disconnected graph).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// The matrix handed to gale_dual is not surjective over Z.
class NotABoundaryMap : public Error {
 public:
  using Error::Error;
};

// Desk-scale guards (face counts, Bell numbers, ground-set sizes).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The reconstructed string recursion produced a negative rank.
class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

// An identity that holds by construction failed. Never expected to fire.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace ngo
