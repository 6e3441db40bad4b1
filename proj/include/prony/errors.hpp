#pragma once

#include <stdexcept>
#include <string>

#include "prony/types.hpp"

namespace prony {

/// Base class for data-dependent solver failures. Usage errors (wrong vector
/// lengths, invalid parameters) throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The measurement vector lies in an unsolvable stratum: the moment Hankel
/// matrix has rank r but its leading r-by-r minor vanishes.
class UnsolvableError : public Error {
 public:
  UnsolvableError(const std::string& what, Index rank, double leading_minor,
                  double tolerance)
      : Error(what),
        rank_(rank),
        leading_minor_(leading_minor),
        tolerance_(tolerance) {}

  Index rank() const noexcept { return rank_; }
  double leading_minor() const noexcept { return leading_minor_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  Index rank_;
  double leading_minor_;
  double tolerance_;
};

/// The leading square block of the moment Hankel matrix is numerically
/// singular, so the denominator system has no stable solution.
class DegenerateLeadingMinorError : public Error {
 public:
  using Error::Error;
};

/// Numerator and denominator share a root; the fraction is not in lowest terms.
class NotIrreducibleError : public Error {
 public:
  using Error::Error;
};

/// The node vector is not subordinated to the configuration; the divided
/// difference collection is not a basis.
class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

/// The Newton Jacobian is singular or hopelessly ill-conditioned at an iterate.
class DegenerateJacobianError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration failed to reach the residual target.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A linear solve exceeded its conditioning or residual threshold.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Separation distance is undefined for a single-node signal.
class UndefinedSeparationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point coincides with a node of the kernel.
class PoleEvaluationError : public Error {
 public:
  using Error::Error;
};

/// File or schema problem in serialized data.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace prony
