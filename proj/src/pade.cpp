#include "prony/pade.hpp"

#include <stdexcept>

#include <Eigen/SVD>

#include "prony/errors.hpp"

namespace prony {

namespace {

constexpr double kSingularGate = 1e-13;

void require_monic(const Polynomial& q, const char* where) {
  if (q.degree() < 1 || std::abs(q.leading() - Complex(1.0)) > 1e-9)
    throw std::invalid_argument(std::string(where) + ": q must be monic of degree >= 1");
}

}  // namespace

Polynomial solve_denominator(const MomentVector& mu, Index r, double* condition) {
  if (r < 1) throw std::invalid_argument("solve_denominator: r must be >= 1");
  if (mu.size() < 2 * r)
    throw std::invalid_argument("solve_denominator: needs at least 2r moments");
  const CMatrix m = hankel_square(mu, r);
  CVector rhs(r);
  for (Index i = 0; i < r; ++i) rhs(i) = -mu(i + r);

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma(0) == 0.0 || sigma(r - 1) <= kSingularGate * sigma(0))
    throw DegenerateLeadingMinorError(
        "solve_denominator: leading minor M_r is numerically singular");
  if (condition) *condition = sigma(0) / sigma(r - 1);

  CVector c(r + 1);
  c.head(r) = svd.solve(rhs);
  c(r) = Complex(1.0);
  return Polynomial(std::move(c));
}

Polynomial solve_numerator(const MomentVector& mu, const Polynomial& q) {
  require_monic(q, "solve_numerator");
  const Index r = q.degree();
  if (mu.size() < r)
    throw std::invalid_argument("solve_numerator: needs at least deg q moments");
  CVector b = CVector::Zero(r);
  for (Index k = 0; k < r; ++k)
    for (Index j = 0; j + k + 1 <= r; ++j) b(k) += q.coeff(k + 1 + j) * mu(j);
  return Polynomial(std::move(b));
}

MomentVector taylor_expand(const RationalFunction& r, Index count) {
  if (count < 0) throw std::invalid_argument("taylor_expand: negative count");
  const Index deg = r.pole_degree();
  MomentVector alpha = MomentVector::Zero(count);
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  for (Index k = 0; k < count; ++k) {
    Complex acc = k < deg ? num.coeff(deg - 1 - k) : Complex(0.0);
    for (Index s = 1; s <= std::min(k, deg); ++s)
      acc -= den.coeff(deg - s) * alpha(k - s);
    alpha(k) = acc;
  }
  return alpha;
}

PadeResult pade_solve(const MomentVector& mu, Index d, double tol) {
  if (d < 1) throw std::invalid_argument("pade_solve: d must be >= 1");
  if (mu.size() != 2 * d)
    throw std::invalid_argument("pade_solve: moment vector must have length 2d");

  PadeResult result;
  result.report = classify(mu, d, tol);
  if (!result.report.solvable())
    throw UnsolvableError("pade_solve: input lies in an unsolvable stratum",
                          result.report.rank, result.report.leading_minor, tol);
  if (result.report.rank == 0) return result;  // zero function

  const Polynomial q = solve_denominator(mu, result.report.rank, &result.condition);
  const Polynomial p = solve_numerator(mu, q);
  result.rational = RationalFunction(p, q);

  const MomentVector reproduced = taylor_expand(result.rational, mu.size());
  const double scale = std::max(mu.norm(), 1e-300);
  result.taylor_residual = (reproduced - mu).norm() / scale;
  return result;
}

Index agreement_order(const MomentVector& mu, const RationalFunction& r, double tol) {
  const MomentVector alpha = taylor_expand(r, mu.size());
  double scale = mu.size() > 0 ? mu.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) scale = 1.0;
  for (Index k = 0; k < mu.size(); ++k)
    if (std::abs(alpha(k) - mu(k)) > tol * scale) return k;
  return mu.size();
}

}  // namespace prony
