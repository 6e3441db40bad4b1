#pragma once

#include <vector>

#include "prony/collision.hpp"
#include "prony/hankel.hpp"
#include "prony/signal.hpp"
#include "prony/types.hpp"

namespace prony {

/// Condition-number ceiling beyond which structured linear solves refuse.
inline constexpr double kConditionLimit = 1e14;

struct ConfluentVandermonde {
  CMatrix matrix;  // d x d, d = sum of multiplicities
  CVector nodes;
  std::vector<Index> multiplicities;
  double condition = 0.0;
};

/// Column block j carries the derivative columns of node x_j: row k of column
/// (j, l) is k!/(k-l)! x_j^{k-l} (zero for l > k), matching the coefficients
/// of the confluent moment equations. Nodes must be pairwise distinct.
ConfluentVandermonde confluent_vandermonde(const CVector& nodes,
                                           const std::vector<Index>& multiplicities);

/// Amplitudes from the linear part V a = (m_0..m_{d-1}) for known nodes and
/// multiplicities. Throws ConditioningError when V is numerically singular or
/// the residual exceeds 1e-9 * ||mu_head|| * cond(V).
CVector solve_linear_part(const CVector& nodes,
                          const std::vector<Index>& multiplicities,
                          const MomentVector& mu_head);

struct SolveDiagnostics {
  Index rank = 0;
  Stratum stratum = Stratum::Solvable;
  double leading_minor = 0.0;
  /// Condition number of the leading minor M_r in the denominator solve.
  double pade_condition = 1.0;
  /// Relative deviation of the solution's moments from the input.
  double moment_residual = 0.0;
  /// First Taylor index at which the Pade fraction deviates from the input.
  Index agreement_order = 0;
  /// Condition of the confluent Vandermonde matrix at the recovered nodes.
  double vandermonde_condition = 0.0;
  /// Condition of the divided-difference collocation matrix (collision mode).
  double basis_condition = 0.0;
  /// Newton iterations (multiplicity-restricted mode).
  Index iterations = 0;
};

struct SolveResult {
  Signal signal;
  SolveDiagnostics diagnostics;
};

struct SolveOptions {
  /// Relative rank / minor tolerance.
  double rank_tol = kRankTol;
  /// Root clustering radius for pole detection; negative selects an automatic
  /// scale-aware value.
  double cluster_tol = -1.0;
};

/// Full inversion of order d: classify the stratum, solve the Pade problem at
/// the detected rank, expand into elementary fractions. Throws
/// UnsolvableError on unsolvable strata. Node order follows the first
/// appearance of the pole clusters.
SolveResult invert_prony(const MomentVector& mu, Index d,
                         const SolveOptions& options = {});

struct RankRestrictedOptions {
  double cluster_tol = -1.0;
  /// Solve in a divided-difference basis, tolerating node collisions.
  bool collision_tolerant = false;
  CollisionSolveOptions collision = {};
};

/// Inversion from exactly 2r moments with the rank fixed to r; requires the
/// leading minor M_r to be nonsingular (DegenerateLeadingMinorError
/// otherwise) but allows any multiplicity structure.
SolveResult invert_rank_restricted(const MomentVector& mu, Index r,
                                   const RankRestrictedOptions& options = {});

struct NewtonOptions {
  Index max_iterations = 100;
  Index max_step_halvings = 20;
  double residual_tol = 1e-10;  // relative to ||mu_star||
};

/// Local inversion with the multiplicity vector fixed to D0, from the first
/// s0 + r0 moments only. Damped Newton iteration on (amplitudes, nodes),
/// starting from `initial` (which must have multiplicity vector D0). Throws
/// DegenerateJacobianError / NoConvergenceError.
SolveResult invert_multiplicity_restricted(const MomentVector& mu_star,
                                           const std::vector<Index>& d0,
                                           const Signal& initial,
                                           const NewtonOptions& options = {});

struct JacobianFactorization {
  /// Confluent Vandermonde on the nodes with multiplicities d_j + 1.
  ConfluentVandermonde vandermonde;
  /// Block-diagonal scaling; block j is the identity with the amplitudes
  /// a_{j,0}..a_{j,d_j-1} in rows 1..d_j of the last column.
  CMatrix scaling;

  CMatrix jacobian() const { return vandermonde.matrix * scaling; }
};

/// Factorization of the Jacobian of the (s0+r0)-moment forward map with
/// respect to the parameters (a_{j,0}..a_{j,d_j-1}, x_j) per node.
JacobianFactorization jacobian_factorization(const Signal& f);

struct ErrorBoundReport {
  double eps = 0.0;
  double separation = 0.0;  // min_{i != j} |x_i - x_j|
  Index support_size = 0;   // s0
  Index rank = 0;           // r0
  /// bound on |delta a_{j,l}| per node j and derivative order l.
  std::vector<std::vector<double>> amplitude_bounds;
  /// bound on |delta x_j| per node j.
  std::vector<double> node_bounds;
};

/// First-order perturbation bounds for the multiplicity-restricted solve under
/// per-moment noise of size eps. Requires at least two nodes (the separation
/// is undefined otherwise: UndefinedSeparationError).
ErrorBoundReport error_bounds(const Signal& f, double eps);

/// Rebuilds the rank-sized Hankel minor as V diag{A_j} V^T with the
/// anti-triangular amplitude blocks A_j(p,q) = C(p+q,p) a_{j,p+q} and returns
/// the largest entry deviation from the matrix of actual moments, relative to
/// its largest entry.
double hankel_factorization_check(const Signal& f);

}  // namespace prony
