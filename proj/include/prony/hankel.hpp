#pragma once

#include <string>

#include "prony/types.hpp"

namespace prony {

/// Default relative tolerance for numerical rank and minor tests.
inline constexpr double kRankTol = 1e-10;

/// The d x (d+1) moment Hankel matrix with entry(i,j) = m_{i+j}; requires
/// mu.size() == 2d.
CMatrix build_hankel(const MomentVector& mu, Index d);

/// The e x e upper-left square minor with entry(i,j) = m_{i+j}; requires
/// mu.size() >= 2e-1.
CMatrix hankel_square(const MomentVector& mu, Index e);

/// Number of singular values above tol * sigma_max; zero for the zero matrix.
/// tol must lie in (0,1).
Index numeric_rank(const CMatrix& h, double tol = kRankTol);

enum class Stratum { Solvable, Unsolvable };

std::string to_string(Stratum s);

struct SolvabilityReport {
  Index rank = 0;
  /// |det M_r| of the leading rank-sized square minor.
  double leading_minor = 0.0;
  Stratum stratum = Stratum::Solvable;
  double tolerance = kRankTol;

  bool solvable() const { return stratum == Stratum::Solvable; }
};

/// Rank of the moment Hankel matrix plus the minor test deciding between the
/// solvable and unsolvable strata. The stratum is Solvable iff the leading
/// r x r minor M_r is numerically nonsingular (smallest singular value above
/// tol times the largest), the scale-free float realization of |M_r| != 0;
/// |det M_r| is reported alongside. Rank 0 (all moments zero) is Solvable
/// with the empty signal.
SolvabilityReport classify(const MomentVector& mu, Index d, double tol = kRankTol);

}  // namespace prony
