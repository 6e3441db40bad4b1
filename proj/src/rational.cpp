#include "prony/rational.hpp"

#include <stdexcept>

namespace prony {

RationalFunction::RationalFunction() : den_(Polynomial::constant(Complex(1.0))) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: zero denominator");
  if (!num_.is_zero() && num_.degree() >= den_.degree())
    throw std::invalid_argument("RationalFunction: requires deg P < deg Q");
  const Complex lead = den_.leading();
  if (lead != Complex(1.0)) {
    den_ = (Complex(1.0) / lead) * den_;
    num_ = (Complex(1.0) / lead) * num_;
  }
}

Complex RationalFunction::operator()(Complex z) const { return num_(z) / den_(z); }

}  // namespace prony
