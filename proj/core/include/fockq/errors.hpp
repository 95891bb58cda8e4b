#pragma once

#include <stdexcept>

namespace fockq {

/// Bad caller input: out-of-range index, invalid signature, forbidden mode/convention pair.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A division that should be exact in the Laurent ring was not.
/// Seeing this means a bug or a wrongly stated relation.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Basis enumeration exceeded the configured state-count guard.
class StateCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fockq
