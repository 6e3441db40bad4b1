#pragma once

#include <stdexcept>
#include <vector>

#include "prony/signal.hpp"
#include "prony/types.hpp"

namespace prony {

/// Coordinates closer than this take the confluent (derivative) branch of the
/// divided-difference recursion.
inline constexpr double kConfluenceTol = 1e-13;

namespace detail {

/// Coordinates regrouped so equal values (within tol) are contiguous and
/// snapped to their group centroid; group order is first appearance.
NodeVector group_confluent(const NodeVector& w, double tol);

}  // namespace detail

/// Divided difference of f on the nodes w, evaluated by the Hermite-aware
/// Newton table. The functor must return g(x, l) = f^(l)(x) / l!.
template <class ScaledDerivs>
Complex dd_evaluate_with(const NodeVector& w, ScaledDerivs&& g) {
  if (w.size() == 0)
    throw std::invalid_argument("dd_evaluate_with: empty node vector");
  const NodeVector x = detail::group_confluent(w, kConfluenceTol);
  const Index n = x.size();
  std::vector<Complex> t(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) t[i] = g(x(i), Index{0});
  for (Index len = 1; len < n; ++len) {
    // t[i] becomes the difference over the window x_{i-len}..x_i; grouping
    // guarantees equal endpoints mean an all-equal window.
    for (Index i = n - 1; i >= len; --i) {
      if (x(i) == x(i - len))
        t[i] = g(x(i), len);
      else
        t[i] = (t[i] - t[i - 1]) / (x(i) - x(i - len));
    }
  }
  return t[static_cast<std::size_t>(n - 1)];
}

/// Divided difference of the monomial x^k on w. Symmetric in the node order;
/// annihilates degrees below |w| - 1.
Complex dd_evaluate(const NodeVector& w, Index monomial_degree);

/// Divided difference of x -> 1/(z - x) on w, which collapses to
/// 1 / prod_i (z - x_i). Throws PoleEvaluationError when z is within 1e-12 of
/// a node.
Complex dd_on_cauchy_kernel(const NodeVector& w, Complex z);

/// The divided difference on w written out as delta derivatives at the
/// distinct nodes; its Stieltjes transform is 1 / prod_j (z - tau_j)^{d_j} and
/// its moments reproduce dd_evaluate(w, k).
Signal chakalov_expansion(const NodeVector& w);

}  // namespace prony
