#pragma once

#include <stdexcept>
#include <string>

namespace liepres {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division requested but the divisor does not divide the dividend.
struct NonDivisible : Error {
  explicit NonDivisible(const std::string& what) : Error(what) {}
};

// A lambda -> infinity limit does not exist (positive net lambda-degree).
struct DivergentLimit : Error {
  explicit DivergentLimit(const std::string& what) : Error(what) {}
};

// Two elements owned by different algebra instances were combined.
struct BackendMismatch : Error {
  explicit BackendMismatch(const std::string& what) : Error(what) {}
};

// A family constructor was asked for a rank below its domain.
struct RankTooSmall : Error {
  explicit RankTooSmall(const std::string& what) : Error(what) {}
};

// A candidate generator triple fails its defining weight relations.
struct WeightMismatch : Error {
  explicit WeightMismatch(const std::string& what) : Error(what) {}
};

// Matrix/vector dimensions do not line up.
struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& what) : Error(what) {}
};

// Structure constants failed the Jacobi identity during construction.
struct JacobiFailure : Error {
  explicit JacobiFailure(const std::string& what) : Error(what) {}
};

// An operator expected to be diagonalizable on the given space is not.
struct NotDiagonalizable : Error {
  explicit NotDiagonalizable(const std::string& what) : Error(what) {}
};

// A central element did not act as a scalar.
struct NotScalar : Error {
  explicit NotScalar(const std::string& what) : Error(what) {}
};

// A parity-graded operation received input of the wrong parity.
struct OddDegreeInput : Error {
  explicit OddDegreeInput(const std::string& what) : Error(what) {}
};

// A computation exceeded a configured degree/order cap.
struct DegreeBoundExceeded : Error {
  explicit DegreeBoundExceeded(const std::string& what) : Error(what) {}
};

// A relation references a family parameter with no bound value.
struct UnboundParameter : Error {
  explicit UnboundParameter(const std::string& what) : Error(what) {}
};

// Parse failure; carries the byte offset of the offending character.
struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& what, size_t pos)
      : Error(what + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

// An identifier that is not part of the relation language.
struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& what) : Error(what) {}
};

// A family/type key outside the supported set.
struct UnknownType : Error {
  explicit UnknownType(const std::string& what) : Error(what) {}
};

}  // namespace liepres
