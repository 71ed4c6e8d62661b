#pragma once

#include <stdexcept>
#include <string>

namespace usca {

/// Malformed or inconsistent caller input (dimension mismatch, bad ranges).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed (non-finite values, factorization breakdown).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation not defined for the given object (e.g. no explicit feature map).
struct UnsupportedOperation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace usca
