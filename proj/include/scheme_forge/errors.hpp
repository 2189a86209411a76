#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scheme_forge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not satisfy the scheme or configuration axioms.
class InvalidScheme : public Error {
 public:
  using Error::Error;
};

class DiagonalViolation : public InvalidScheme {
 public:
  DiagonalViolation(int x, int y, int color);
  int x, y, color;
};

class DualViolation : public InvalidScheme {
 public:
  DualViolation(int x, int y, const std::string& why);
  int x, y;
};

class NonConstantIntersection : public InvalidScheme {
 public:
  NonConstantIntersection(int s, int t, int u, int x, int y, int expected, int found);
  int s, t, u, x, y;
};

/// An operation was invoked on a scheme outside its hypothesis
/// (not 4-equivalenced, S3 empty, rank too small, ...).
class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

class NotFourEquivalenced : public HypothesisUnmet {
 public:
  NotFourEquivalenced() : HypothesisUnmet("scheme is not 4-equivalenced") {}
};

class DiagonalColor : public Error {
 public:
  DiagonalColor() : Error("relation 0 is the diagonal") {}
};

class DichotomyViolation : public InvalidScheme {
 public:
  explicit DichotomyViolation(int s);
  int s;
};

class TrichotomyViolation : public InvalidScheme {
 public:
  TrichotomyViolation(int s, int t, const std::string& why);
  int s, t;
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(std::size_t bound);
  std::size_t bound;
};

class NotTransitive : public Error {
 public:
  NotTransitive() : Error("group is not transitive") {}
};

class BadPrime : public Error {
 public:
  explicit BadPrime(long p);
};

class DegreeTooLarge : public Error {
 public:
  DegreeTooLarge(long degree, long limit);
};

class PlaneError : public Error {
 public:
  enum class Kind { NoExtension, AmbiguousExtension, InvalidBase };
  PlaneError(Kind kind, const std::string& what);
  Kind kind;
};

class BaseMismatch : public Error {
 public:
  BaseMismatch() : Error("planes do not share the (0,0) point") {}
};

class NotAFiber : public Error {
 public:
  explicit NotAFiber(int point);
};

class CutoffExceeded : public Error {
 public:
  explicit CutoffExceeded(int cutoff);
};

/// Malformed .asc / .perm text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace scheme_forge
