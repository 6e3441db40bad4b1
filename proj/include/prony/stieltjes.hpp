#pragma once

#include <vector>

#include "prony/polynomial.hpp"
#include "prony/rational.hpp"
#include "prony/signal.hpp"
#include "prony/types.hpp"

namespace prony {

/// Stieltjes transform R(z) = sum_j sum_l a_{j,l} l! / (z - x_j)^{l+1},
/// assembled over the common denominator prod_j (z - x_j)^{d_j}.
/// deg Q equals the rank of the signal.
RationalFunction stieltjes_transform(const Signal& f);

struct Pole {
  Complex location;
  Index multiplicity = 1;
};

/// Root-clustering tolerance used when the caller passes a negative value:
/// 1e-3 * (1 + max |root|). Large enough to absorb the m-th-root splitting a
/// multiple root suffers under coefficient rounding (measured up to 8e-4 for
/// m = 4 on the companion eigensolver), small against genuine separations.
double default_cluster_tol(double max_abs_root);

/// Greedy first-appearance clustering of a root list: a root within
/// cluster_tol of an existing cluster centroid joins it and the centroid is
/// updated. Multiplicities sum to the number of roots.
std::vector<Pole> cluster_roots(const CVector& roots, double cluster_tol);

/// Roots of the monic polynomial q, clustered by cluster_roots. Clusters are
/// ordered by first appearance; cluster_tol < 0 selects the default.
std::vector<Pole> find_poles(const Polynomial& q, double cluster_tol = -1.0);

/// Elementary-fraction expansion of num / prod (z - tau_j)^{m_j} over a known
/// pole list: at each pole the first m_j local Taylor coefficients of
/// num / (q / (z-tau)^m) are extracted by shifted series division.
/// Throws NotIrreducibleError when a top coefficient (num(tau) relative to
/// num's magnitude at tau) vanishes.
Signal expand_over_poles(const Polynomial& num, const std::vector<Pole>& poles,
                         double irreducible_tol = 1e-10);

/// Inverse Stieltjes transform: locate the poles of R and expand it into a
/// signal. stieltjes_transform(result) reproduces R when R is irreducible.
Signal partial_fractions(const RationalFunction& r, double cluster_tol = -1.0);

}  // namespace prony
