#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported ring specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different ring contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// The element has no multiplicative inverse (zero or zero divisor).
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Dimensions are incompatible, or an index is out of range.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A matrix entry violates H_{i,j} = a_{i xor j}.
class NotHadamard : public Error {
 public:
  NotHadamard(std::size_t row, std::size_t col, const std::string& what)
      : Error(what), row_(row), col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// An operation that needs division was given a ring that is not a field.
class NotAField : public Error {
 public:
  using Error::Error;
};

/// A group-algebra element outside the augmentation ideal was passed where
/// an ideal member is required.
class NotInIdeal : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured computational limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hadring
