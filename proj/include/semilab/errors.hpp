#ifndef SEMILAB_ERRORS_HPP_
#define SEMILAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semilab {

// Base class for all input-data errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cayley table fails associativity; (x, y, z) is a witness triple with
// (x*y)*z != x*(y*z).
struct AssociativityError : Error {
  int x, y, z;
  AssociativityError(int x, int y, int z)
      : Error("associativity fails at (" + std::to_string(x) + ", "
              + std::to_string(y) + ", " + std::to_string(z) + ")"),
        x(x), y(y), z(z) {}
};

// A declared zero element is not absorbing; `witness` multiplies it away.
struct ZeroError : Error {
  int zero, witness;
  ZeroError(int zero, int witness)
      : Error("element " + std::to_string(zero)
              + " is not absorbing (witness " + std::to_string(witness) + ")"),
        zero(zero), witness(witness) {}
};

// A subset passed as an ideal is not one; x*y escapes the subset.
struct NotAnIdeal : Error {
  int x, y;
  NotAnIdeal(int x, int y)
      : Error("not an ideal: product " + std::to_string(x) + "*"
              + std::to_string(y) + " leaves the subset"),
        x(x), y(y) {}
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input set") {}
};

struct SizeLimitExceeded : Error {
  SizeLimitExceeded(const std::string& what, int n, int limit)
      : Error(what + ": size " + std::to_string(n) + " exceeds limit "
              + std::to_string(limit)) {}
};

struct NoZeroElement : Error {
  explicit NoZeroElement(const std::string& who)
      : Error(who + " has no zero element") {}
};

struct IrregularSandwich : Error {
  bool row;  // true: offending row, false: offending column
  int index;
  IrregularSandwich(bool row, int index)
      : Error(std::string("sandwich matrix has an all-zero ")
              + (row ? "row " : "column ") + std::to_string(index)),
        row(row), index(index) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& why) : Error("not a group: " + why) {}
};

// numerical_block_sizes exhausted its retries without a consistent
// eigenvalue clustering.
struct NumericalAmbiguity : Error {
  NumericalAmbiguity()
      : Error("eigenvalue clustering stayed ambiguous after max retries") {}
};

struct UnsupportedOrder : Error {
  explicit UnsupportedOrder(int n)
      : Error("unsupported order " + std::to_string(n)) {}
};

// Malformed .sg input.
struct FormatError : Error {
  using Error::Error;
};

// A cross-check between two independently computed answers failed.  This is
// a bug in the library, never a property of the input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace semilab

#endif  // SEMILAB_ERRORS_HPP_
