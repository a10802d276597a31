#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index outside the domain of a table-backed object.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsupported input: parse failures, asymmetric profiles where
/// symmetry is required, enumeration caps.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a mathematical finding, never
/// a user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinchain
