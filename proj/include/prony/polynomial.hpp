#pragma once

#include <initializer_list>

#include "prony/types.hpp"

namespace prony {

/// Dense univariate polynomial over C with coefficients stored in ascending
/// degree order. The zero polynomial has an empty coefficient vector and
/// degree -1; otherwise the trailing coefficient is nonzero (exact zeros are
/// trimmed at construction).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(CVector coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex value);
  static Polynomial monomial(Index degree, Complex scale = Complex(1.0));

  Index degree() const { return static_cast<Index>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 0; }
  Complex leading() const {
    return is_zero() ? Complex(0.0) : coeffs_(coeffs_.size() - 1);
  }
  /// Coefficient of z^i; zero outside the stored range.
  Complex coeff(Index i) const {
    return (i >= 0 && i < coeffs_.size()) ? coeffs_(i) : Complex(0.0);
  }
  const CVector& coeffs() const { return coeffs_; }

  /// Horner evaluation.
  Complex operator()(Complex z) const;

 private:
  CVector coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Complex scale, const Polynomial& p);
Polynomial derivative(const Polynomial& p);

/// Monic polynomial with the given roots; repetitions allowed.
Polynomial monic_from_roots(const CVector& roots);

/// Coefficients of p(center + u) as a polynomial in u, i.e. the Taylor
/// coefficients p^(k)(center)/k!.
Polynomial taylor_shift(const Polynomial& p, Complex center);

/// All roots of p (degree >= 1), computed as eigenvalues of the companion
/// matrix. Order is the eigensolver's order and is deterministic.
CVector polynomial_roots(const Polynomial& p);

/// First `count` coefficients of the power series num/den. Vectors hold
/// ascending series coefficients; requires den(0) != 0.
CVector power_series_divide(const CVector& num, const CVector& den, Index count);

}  // namespace prony
