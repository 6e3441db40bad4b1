#pragma once

#include <vector>

#include "prony/signal.hpp"
#include "prony/types.hpp"

namespace prony {

/// A partition of the index set {0..r-1} into nonempty disjoint blocks.
/// Blocks keep their given order; indices inside a block are sorted ascending.
class Configuration {
 public:
  explicit Configuration(std::vector<std::vector<Index>> blocks);
  Configuration(std::initializer_list<std::vector<Index>> blocks)
      : Configuration(std::vector<std::vector<Index>>(blocks)) {}

  Index order() const { return order_; }  // r
  Index block_count() const { return static_cast<Index>(blocks_.size()); }
  const std::vector<std::vector<Index>>& blocks() const { return blocks_; }
  std::vector<Index> block_sizes() const;

 private:
  std::vector<std::vector<Index>> blocks_;
  Index order_ = 0;
};

/// True iff every pair of equal coordinates of w (within tol) shares a block.
bool is_subordinated(const NodeVector& w, const Configuration& c,
                     double tol = kNodeMergeTol);

/// The 2r x r matrix nu with nu(k, col) the divided difference of x^k over the
/// col-th prefix index set X_{j,m} (blocks in order, prefixes by length).
/// Full column rank iff w is subordinated to c.
CMatrix collocation_matrix(const NodeVector& w, const Configuration& c);

struct CollisionBasis {
  NodeVector w;
  Configuration configuration;
  /// Prefix index sets, block-major; one per basis element.
  std::vector<std::vector<Index>> elements;
  CMatrix collocation;  // 2r x r
  double condition = 0.0;
};

/// The prefix divided-difference collection for (w, c) together with its
/// collocation matrix over x^0..x^{2r-1}. Throws DegenerateBasisError when w
/// is not subordinated to c.
CollisionBasis build_basis(const NodeVector& w, const Configuration& c);

struct DividedDifferenceSolve {
  CVector beta;
  double residual = 0.0;   // ||nu beta - mu||
  double condition = 0.0;  // cond of the collocation matrix
};

/// Least-squares solve of sum beta_{j,l} nu_{j,l,k} = m_k, k = 0..2r-1.
/// Coefficient order matches the basis element order.
DividedDifferenceSolve solve_in_dd_basis(const MomentVector& mu,
                                         const NodeVector& w,
                                         const Configuration& c);

struct CollisionSolveOptions {
  /// Roots of one cluster closer than snap_tol_rel * (1 + max|root|) are
  /// snapped to their common centroid, producing true repeated coordinates.
  double snap_tol_rel = 1e-6;
  /// Cluster centroids closer than ambiguity_factor * cluster_tol raise the
  /// ambiguity flag.
  double ambiguity_factor = 3.0;
};

struct CollisionSolveResult {
  NodeVector w;               // denominator roots, cluster by cluster
  Configuration configuration;
  CVector beta;
  Signal signal;              // reassembled from the basis elements
  CVector cluster_centroids;  // one per configuration block
  double residual = 0.0;      // ||nu beta - mu|| / ||mu||
  double basis_condition = 0.0;
  double denominator_condition = 0.0;
  bool cluster_ambiguity = false;
};

/// Rank-restricted solve in a divided-difference basis: the denominator system
/// at size r gives the node vector, roots are grouped into clusters of radius
/// cluster_tol (negative selects the default of find_poles), the cluster
/// partition defines the configuration, and the coefficients come from the
/// collocation least squares. The coefficients stay bounded through node
/// collisions while standard amplitudes blow up.
CollisionSolveResult solve_with_collisions(const MomentVector& mu, Index r,
                                           double cluster_tol = -1.0,
                                           const CollisionSolveOptions& options = {});

/// Permutation p minimizing the total distance with p[i] the index of the
/// centroid in `current` matched to previous(i); used to keep cluster labels
/// consistent along a parameter sweep.
std::vector<Index> match_clusters(const CVector& previous, const CVector& current);

}  // namespace prony
