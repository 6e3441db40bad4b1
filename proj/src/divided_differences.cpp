#include "prony/divided_differences.hpp"

#include <stdexcept>
#include <vector>

#include "prony/detail/factorials.hpp"
#include "prony/errors.hpp"
#include "prony/stieltjes.hpp"

namespace prony {

namespace detail {

NodeVector group_confluent(const NodeVector& w, double tol) {
  std::vector<Complex> centroid;
  std::vector<Complex> sum;
  std::vector<Index> count;
  std::vector<std::size_t> group_of(static_cast<std::size_t>(w.size()));
  for (Index i = 0; i < w.size(); ++i) {
    bool placed = false;
    for (std::size_t g = 0; g < centroid.size(); ++g) {
      if (std::abs(w(i) - centroid[g]) <= tol) {
        sum[g] += w(i);
        ++count[g];
        centroid[g] = sum[g] / static_cast<double>(count[g]);
        group_of[i] = g;
        placed = true;
        break;
      }
    }
    if (!placed) {
      group_of[i] = centroid.size();
      centroid.push_back(w(i));
      sum.push_back(w(i));
      count.push_back(1);
    }
  }
  NodeVector out(w.size());
  Index pos = 0;
  for (std::size_t g = 0; g < centroid.size(); ++g)
    for (Index k = 0; k < count[g]; ++k) out(pos++) = centroid[g];
  return out;
}

}  // namespace detail

Complex dd_evaluate(const NodeVector& w, Index monomial_degree) {
  if (monomial_degree < 0)
    throw std::invalid_argument("dd_evaluate: negative monomial degree");
  const Index k = monomial_degree;
  return dd_evaluate_with(w, [k](Complex x, Index l) -> Complex {
    if (l > k) return Complex(0.0);
    Complex power(1.0);
    for (Index i = 0; i < k - l; ++i) power *= x;
    return detail::binomial(k, l) * power;
  });
}

Complex dd_on_cauchy_kernel(const NodeVector& w, Complex z) {
  if (w.size() == 0)
    throw std::invalid_argument("dd_on_cauchy_kernel: empty node vector");
  Complex q(1.0);
  for (Index i = 0; i < w.size(); ++i) {
    if (std::abs(z - w(i)) <= 1e-12)
      throw PoleEvaluationError("dd_on_cauchy_kernel: z coincides with a node");
    q *= z - w(i);
  }
  return Complex(1.0) / q;
}

Signal chakalov_expansion(const NodeVector& w) {
  if (w.size() == 0)
    throw std::invalid_argument("chakalov_expansion: empty node vector");
  const NodeVector grouped = detail::group_confluent(w, kConfluenceTol);
  const NodeConfiguration conf = configuration_of(grouped);
  std::vector<Pole> poles(static_cast<std::size_t>(conf.size()));
  for (Index j = 0; j < conf.size(); ++j)
    poles[j] = {conf.distinct(j), conf.multiplicities[j]};
  return expand_over_poles(Polynomial::constant(Complex(1.0)), poles);
}

}  // namespace prony
