#include "prony/polynomial.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace prony {

namespace {

CVector trimmed(CVector c) {
  Index n = c.size();
  while (n > 0 && c(n - 1) == Complex(0.0)) --n;
  return c.head(n).eval();
}

}  // namespace

Polynomial::Polynomial(CVector coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) {
  CVector c(static_cast<Index>(coeffs.size()));
  Index i = 0;
  for (const Complex& v : coeffs) c(i++) = v;
  coeffs_ = trimmed(std::move(c));
}

Polynomial Polynomial::constant(Complex value) { return Polynomial{value}; }

Polynomial Polynomial::monomial(Index degree, Complex scale) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  CVector c = CVector::Zero(degree + 1);
  c(degree) = scale;
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (Index i = coeffs_.size() - 1; i >= 0; --i) acc = acc * z + coeffs_(i);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Index n = std::max(a.coeffs().size(), b.coeffs().size());
  CVector c = CVector::Zero(n);
  c.head(a.coeffs().size()) = a.coeffs();
  c.head(b.coeffs().size()) += b.coeffs();
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Complex(-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  CVector c = CVector::Zero(a.degree() + b.degree() + 1);
  for (Index i = 0; i <= a.degree(); ++i)
    for (Index j = 0; j <= b.degree(); ++j)
      c(i + j) += a.coeffs()(i) * b.coeffs()(j);
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex scale, const Polynomial& p) {
  if (scale == Complex(0.0)) return Polynomial{};
  return Polynomial((scale * p.coeffs().array()).matrix().eval());
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return Polynomial{};
  CVector c(p.degree());
  for (Index i = 1; i <= p.degree(); ++i)
    c(i - 1) = static_cast<double>(i) * p.coeffs()(i);
  return Polynomial(std::move(c));
}

Polynomial monic_from_roots(const CVector& roots) {
  Polynomial p = Polynomial::constant(Complex(1.0));
  for (Index i = 0; i < roots.size(); ++i)
    p = p * Polynomial{-roots(i), Complex(1.0)};
  return p;
}

Polynomial taylor_shift(const Polynomial& p, Complex center) {
  if (p.is_zero()) return p;
  CVector b = p.coeffs();
  const Index n = b.size() - 1;
  // Repeated synthetic division: b becomes p^(k)(center)/k!.
  for (Index k = 0; k <= n; ++k)
    for (Index j = n - 1; j >= k; --j) b(j) += center * b(j + 1);
  return Polynomial(std::move(b));
}

CVector polynomial_roots(const Polynomial& p) {
  const Index n = p.degree();
  if (n < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
  const Complex lead = p.leading();
  if (n == 1) {
    CVector r(1);
    r(0) = -p.coeff(0) / lead;
    return r;
  }
  CMatrix companion = CMatrix::Zero(n, n);
  companion.diagonal(-1).setOnes();
  for (Index i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / lead;
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigensolver failed");
  return solver.eigenvalues();
}

CVector power_series_divide(const CVector& num, const CVector& den, Index count) {
  if (den.size() == 0 || den(0) == Complex(0.0))
    throw std::invalid_argument("power_series_divide: den(0) must be nonzero");
  if (count < 0) throw std::invalid_argument("power_series_divide: negative count");
  CVector g = CVector::Zero(count);
  for (Index k = 0; k < count; ++k) {
    Complex acc = k < num.size() ? num(k) : Complex(0.0);
    for (Index i = 1; i <= k && i < den.size(); ++i) acc -= den(i) * g(k - i);
    g(k) = acc / den(0);
  }
  return g;
}

}  // namespace prony
