#pragma once

#include <stdexcept>
#include <string>

namespace propersplit {

/// Base class for every failure this library reports deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that needs a square matrix received a rectangular one.
struct NotSquare : Error {
  using Error::Error;
};

/// A matrix required to be Hermitian failed the symmetry gate.
struct NotHermitian : Error {
  using Error::Error;
};

/// The two subspaces handed to an oblique projector do not split the space.
struct NotAComplement : Error {
  using Error::Error;
};

/// The right-hand side is outside the range of the coefficient matrix.
struct NotSolvable : Error {
  using Error::Error;
};

/// U - V fails the range/nullspace conditions of a proper splitting.
struct NotProper : Error {
  using Error::Error;
};

/// A construction that needs a normal matrix received a non-normal one.
struct NotNormal : Error {
  using Error::Error;
};

/// Preconditions of a theorem-backed check do not hold for these inputs.
struct NotApplicable : Error {
  using Error::Error;
};

/// Two splittings being compared do not share the same T.
struct MismatchedT : Error {
  using Error::Error;
};

/// I - U^+V is numerically singular, so the iteration map is undefined.
struct SingularIteration : Error {
  using Error::Error;
};

/// The iteration norm guard tripped.
struct Diverged : Error {
  using Error::Error;
};

/// The iteration hit its step cap before meeting the stopping rule.
struct MaxIterations : Error {
  using Error::Error;
};

/// A matrix file violated the text format; the message carries
/// "name:line:column" so callers can surface the location as-is.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace propersplit
