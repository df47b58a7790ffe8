#pragma once

#include <stdexcept>
#include <string>

namespace secular {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (rational literals, matrix documents, scenarios).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: non-square matrix, zero
/// polynomial where a nonzero one is required, non-definite form, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// det of the pencil vanishes identically (Kronecker's singular case).
class SingularPencilError : public PreconditionError {
 public:
  SingularPencilError()
      : PreconditionError("singular pencil: determinant is identically zero "
                          "(Kronecker singular case out of scope)") {}
};

/// The exact path was requested but the data needs irrational arithmetic.
class PathUnavailableError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold failed; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace secular
