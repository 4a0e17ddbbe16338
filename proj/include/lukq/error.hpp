#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lukq {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: malformed text, bad files, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical result left its admissible range or two independent
/// numerical routes disagreed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonCrispOperand : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : ValidationError("dimension mismatch: " + std::to_string(lhs) +
                        " vs " + std::to_string(rhs)) {}
};

class InvariantViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace lukq
