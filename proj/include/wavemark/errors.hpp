#pragma once

#include <stdexcept>

namespace wavemark {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
struct IoError : Error {
  using Error::Error;
};

// File contents violate the expected on-disk format.
struct FormatError : Error {
  using Error::Error;
};

// An argument violates a documented precondition.
struct ArgumentError : Error {
  using Error::Error;
};

// Payload needs more blocks than the target subband provides.
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace wavemark
