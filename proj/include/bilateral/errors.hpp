#pragma once

#include <stdexcept>
#include <string>

namespace bilateral {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented invariant (CLI exit code 2).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed command-line request: unknown target, missing parameter (CLI exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Mathematical-domain failures (CLI exit code 3).
class MathDomainError : public Error {
 public:
  using Error::Error;
};

/// Argument at (or within tolerance of) a gamma or Pochhammer pole.
class PoleError : public MathDomainError {
 public:
  using MathDomainError::MathDomainError;
};

/// A bilateral series fails the absolute-convergence gate.
class DivergenceError : public MathDomainError {
 public:
  using MathDomainError::MathDomainError;
};

/// The Pascal-plane limit grows without bound as h -> 0.
class LimitDivergesError : public MathDomainError {
 public:
  using MathDomainError::MathDomainError;
};

/// A power base sits on the negative real axis, where the principal branch is ambiguous.
class BranchCutError : public MathDomainError {
 public:
  using MathDomainError::MathDomainError;
};

class OverflowError : public MathDomainError {
 public:
  using MathDomainError::MathDomainError;
};

}  // namespace bilateral
