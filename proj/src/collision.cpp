#include "prony/collision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

#include "prony/divided_differences.hpp"
#include "prony/errors.hpp"
#include "prony/pade.hpp"
#include "prony/stieltjes.hpp"

namespace prony {

Configuration::Configuration(std::vector<std::vector<Index>> blocks)
    : blocks_(std::move(blocks)) {
  for (auto& block : blocks_) {
    if (block.empty())
      throw std::invalid_argument("Configuration: empty block");
    std::sort(block.begin(), block.end());
    order_ += static_cast<Index>(block.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(order_), false);
  for (const auto& block : blocks_) {
    for (Index i : block) {
      if (i < 0 || i >= order_ || seen[static_cast<std::size_t>(i)])
        throw std::invalid_argument(
            "Configuration: blocks must partition 0..r-1");
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
}

std::vector<Index> Configuration::block_sizes() const {
  std::vector<Index> sizes(blocks_.size());
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    sizes[j] = static_cast<Index>(blocks_[j].size());
  return sizes;
}

bool is_subordinated(const NodeVector& w, const Configuration& c, double tol) {
  if (w.size() != c.order())
    throw std::invalid_argument("is_subordinated: |w| must equal the order of c");
  std::vector<Index> block_of(static_cast<std::size_t>(c.order()));
  for (Index j = 0; j < c.block_count(); ++j)
    for (Index i : c.blocks()[static_cast<std::size_t>(j)])
      block_of[static_cast<std::size_t>(i)] = j;
  for (Index i = 0; i < w.size(); ++i)
    for (Index k = i + 1; k < w.size(); ++k)
      if (std::abs(w(i) - w(k)) <= tol &&
          block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(k)])
        return false;
  return true;
}

namespace {

std::vector<std::vector<Index>> prefix_elements(const Configuration& c) {
  std::vector<std::vector<Index>> elements;
  for (const auto& block : c.blocks())
    for (std::size_t m = 1; m <= block.size(); ++m)
      elements.emplace_back(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(m));
  return elements;
}

NodeVector gather(const NodeVector& w, const std::vector<Index>& idx) {
  NodeVector out(static_cast<Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out(static_cast<Index>(i)) = w(idx[i]);
  return out;
}

}  // namespace

CMatrix collocation_matrix(const NodeVector& w, const Configuration& c) {
  if (w.size() != c.order())
    throw std::invalid_argument("collocation_matrix: |w| must equal the order of c");
  const Index r = c.order();
  const auto elements = prefix_elements(c);
  CMatrix nu(2 * r, r);
  for (std::size_t col = 0; col < elements.size(); ++col) {
    const NodeVector nodes = gather(w, elements[col]);
    for (Index k = 0; k < 2 * r; ++k)
      nu(k, static_cast<Index>(col)) = dd_evaluate(nodes, k);
  }
  return nu;
}

CollisionBasis build_basis(const NodeVector& w, const Configuration& c) {
  if (!is_subordinated(w, c))
    throw DegenerateBasisError("build_basis: node vector not subordinated to the configuration");
  CollisionBasis basis{w, c, prefix_elements(c), collocation_matrix(w, c), 0.0};
  Eigen::JacobiSVD<CMatrix> svd(basis.collocation);
  const auto& sigma = svd.singularValues();
  basis.condition = sigma(sigma.size() - 1) > 0.0
                        ? sigma(0) / sigma(sigma.size() - 1)
                        : std::numeric_limits<double>::infinity();
  return basis;
}

DividedDifferenceSolve solve_in_dd_basis(const MomentVector& mu,
                                         const NodeVector& w,
                                         const Configuration& c) {
  if (mu.size() != 2 * c.order())
    throw std::invalid_argument("solve_in_dd_basis: needs 2r moments");
  const CollisionBasis basis = build_basis(w, c);
  Eigen::JacobiSVD<CMatrix> svd(basis.collocation,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  DividedDifferenceSolve solve;
  solve.beta = svd.solve(mu);
  solve.residual = (basis.collocation * solve.beta - mu).norm();
  solve.condition = basis.condition;
  return solve;
}

namespace {

struct Cluster {
  std::vector<Index> members;  // indices into the root list
  Complex centroid;
};

std::vector<Cluster> greedy_clusters(const CVector& points, double radius) {
  std::vector<Cluster> clusters;
  std::vector<Complex> sums;
  for (Index i = 0; i < points.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(points(i) - clusters[c].centroid) <= radius) {
        clusters[c].members.push_back(i);
        sums[c] += points(i);
        clusters[c].centroid = sums[c] / static_cast<double>(clusters[c].members.size());
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({{i}, points(i)});
      sums.push_back(points(i));
    }
  }
  return clusters;
}

}  // namespace

CollisionSolveResult solve_with_collisions(const MomentVector& mu, Index r,
                                           double cluster_tol,
                                           const CollisionSolveOptions& options) {
  if (r < 1) throw std::invalid_argument("solve_with_collisions: r must be >= 1");
  if (mu.size() != 2 * r)
    throw std::invalid_argument("solve_with_collisions: needs 2r moments");

  double cond = 1.0;
  const Polynomial q = solve_denominator(mu, r, &cond);
  const CVector roots = polynomial_roots(q);
  const double scale = 1.0 + roots.cwiseAbs().maxCoeff();
  if (cluster_tol < 0.0) cluster_tol = default_cluster_tol(scale - 1.0);

  std::vector<Cluster> clusters = greedy_clusters(roots, cluster_tol);

  // Members closer than the snap tolerance become true repeated coordinates at
  // their common centroid.
  const double snap_tol = options.snap_tol_rel * scale;
  NodeVector w(r);
  std::vector<std::vector<Index>> blocks(clusters.size());
  CVector centroids(static_cast<Index>(clusters.size()));
  Index pos = 0;
  for (std::size_t cidx = 0; cidx < clusters.size(); ++cidx) {
    const Cluster& cluster = clusters[cidx];
    centroids(static_cast<Index>(cidx)) = cluster.centroid;
    CVector member_values(static_cast<Index>(cluster.members.size()));
    for (std::size_t i = 0; i < cluster.members.size(); ++i)
      member_values(static_cast<Index>(i)) = roots(cluster.members[i]);
    for (const Cluster& sub : greedy_clusters(member_values, snap_tol)) {
      for (std::size_t k = 0; k < sub.members.size(); ++k) {
        blocks[cidx].push_back(pos);
        w(pos++) = sub.centroid;
      }
    }
  }

  CollisionSolveResult result{
      std::move(w), Configuration(std::move(blocks)), {}, {}, std::move(centroids),
      0.0, 0.0, cond, false};

  for (Index a = 0; a < result.cluster_centroids.size(); ++a)
    for (Index b = a + 1; b < result.cluster_centroids.size(); ++b)
      if (std::abs(result.cluster_centroids(a) - result.cluster_centroids(b)) <
          options.ambiguity_factor * cluster_tol)
        result.cluster_ambiguity = true;

  const DividedDifferenceSolve dd = solve_in_dd_basis(mu, result.w, result.configuration);
  result.beta = dd.beta;
  result.basis_condition = dd.condition;
  result.residual = dd.residual / std::max(mu.norm(), 1e-300);

  Signal reassembled;
  const auto elements = prefix_elements(result.configuration);
  for (std::size_t col = 0; col < elements.size(); ++col) {
    const Complex coeff = result.beta(static_cast<Index>(col));
    if (coeff == Complex(0.0)) continue;
    reassembled = reassembled + coeff * chakalov_expansion(gather(result.w, elements[col]));
  }
  result.signal = std::move(reassembled);
  return result;
}

std::vector<Index> match_clusters(const CVector& previous, const CVector& current) {
  if (previous.size() != current.size())
    throw std::invalid_argument("match_clusters: size mismatch");
  const Index n = previous.size();
  if (n > 12) throw std::invalid_argument("match_clusters: too many clusters");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (Index i = 0; i < n; ++i)
      cost += std::abs(previous(i) - current(perm[static_cast<std::size_t>(i)]));
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace prony
