#pragma once

#include "prony/polynomial.hpp"
#include "prony/types.hpp"

namespace prony {

/// Rational function P/Q vanishing at infinity: deg P < deg Q, Q monic.
/// The constructor rescales both parts so the denominator is exactly monic.
/// The default-constructed value is the zero function 0/1.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Degree of the denominator (0 for the zero function).
  Index pole_degree() const { return den_.degree(); }
  bool is_zero() const { return num_.is_zero(); }

  Complex operator()(Complex z) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace prony
