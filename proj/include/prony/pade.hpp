#pragma once

#include "prony/hankel.hpp"
#include "prony/polynomial.hpp"
#include "prony/rational.hpp"
#include "prony/types.hpp"

namespace prony {

/// Monic denominator Q of degree r from the homogeneous Hankel system
/// M_r (c_0..c_{r-1})^T = -(m_r..m_{2r-1})^T with c_r = 1.
/// Requires mu.size() >= 2r; throws DegenerateLeadingMinorError when M_r is
/// numerically singular. If `condition` is non-null it receives cond(M_r).
Polynomial solve_denominator(const MomentVector& mu, Index r,
                             double* condition = nullptr);

/// Numerator P (deg P < deg Q) of the fraction matching mu, from the
/// anti-triangular system b_k = sum_j c_{k+1+j} m_j. q must be monic.
Polynomial solve_numerator(const MomentVector& mu, const Polynomial& q);

/// First `count` Taylor coefficients of R at infinity:
/// R(z) = sum_k alpha_k z^{-k-1}. Seeded by long division for the first
/// deg Q terms, then continued by the denominator recurrence.
MomentVector taylor_expand(const RationalFunction& r, Index count);

struct PadeResult {
  RationalFunction rational;
  SolvabilityReport report;
  /// Condition number of the leading minor M_r (1 when rank is 0).
  double condition = 1.0;
  /// Relative deviation of taylor_expand(rational, 2d) from the input.
  double taylor_residual = 0.0;

  Index rank() const { return report.rank; }
};

/// Full diagonal Pade solve: classify the rank, solve the denominator system
/// at that size, then the numerator system. Throws UnsolvableError on the
/// unsolvable strata; returns the zero function for rank 0.
PadeResult pade_solve(const MomentVector& mu, Index d, double tol = kRankTol);

/// Index of the first Taylor coefficient of R that deviates from mu by more
/// than tol * max|mu|; mu.size() when there is no deviation.
Index agreement_order(const MomentVector& mu, const RationalFunction& r,
                      double tol = 1e-9);

}  // namespace prony
