#include "prony/stieltjes.hpp"

#include <stdexcept>

#include "prony/detail/factorials.hpp"
#include "prony/errors.hpp"

namespace prony {

RationalFunction stieltjes_transform(const Signal& f) {
  if (f.is_zero()) return RationalFunction{};
  const auto& support = f.support();
  const Index s = f.support_size();

  // Per-node monic factors (z - x_j)^{d_j}.
  std::vector<Polynomial> factor(static_cast<std::size_t>(s));
  for (Index j = 0; j < s; ++j) {
    CVector rep = CVector::Constant(support[j].amplitudes.size(), support[j].node);
    factor[j] = monic_from_roots(rep);
  }

  Polynomial q = Polynomial::constant(Complex(1.0));
  for (const Polynomial& fj : factor) q = q * fj;

  Polynomial p;
  for (Index j = 0; j < s; ++j) {
    Polynomial cofactor = Polynomial::constant(Complex(1.0));
    for (Index i = 0; i < s; ++i)
      if (i != j) cofactor = cofactor * factor[i];
    const CVector& a = support[j].amplitudes;
    const Index dj = a.size();
    Polynomial inner;
    for (Index l = 0; l < dj; ++l) {
      if (a(l) == Complex(0.0)) continue;
      CVector rep = CVector::Constant(dj - 1 - l, support[j].node);
      inner = inner + (a(l) * detail::factorial(l)) * monic_from_roots(rep);
    }
    p = p + inner * cofactor;
  }
  return RationalFunction(p, q);
}

double default_cluster_tol(double max_abs_root) {
  return 1e-3 * (1.0 + max_abs_root);
}

std::vector<Pole> cluster_roots(const CVector& roots, double cluster_tol) {
  std::vector<Pole> poles;
  std::vector<Complex> sums;
  for (Index i = 0; i < roots.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < poles.size(); ++c) {
      if (std::abs(roots(i) - poles[c].location) <= cluster_tol) {
        sums[c] += roots(i);
        ++poles[c].multiplicity;
        poles[c].location = sums[c] / static_cast<double>(poles[c].multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) {
      poles.push_back({roots(i), 1});
      sums.push_back(roots(i));
    }
  }
  return poles;
}

std::vector<Pole> find_poles(const Polynomial& q, double cluster_tol) {
  if (q.degree() < 1 || std::abs(q.leading() - Complex(1.0)) > 1e-9)
    throw std::invalid_argument("find_poles: q must be monic of degree >= 1");
  const CVector roots = polynomial_roots(q);
  if (cluster_tol < 0.0) cluster_tol = default_cluster_tol(roots.cwiseAbs().maxCoeff());
  return cluster_roots(roots, cluster_tol);
}

Signal expand_over_poles(const Polynomial& num, const std::vector<Pole>& poles,
                         double irreducible_tol) {
  if (poles.empty()) return Signal{};
  if (num.is_zero())
    throw NotIrreducibleError("expand_over_poles: zero numerator over nontrivial poles");

  std::vector<Spike> spikes;
  spikes.reserve(poles.size());
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const Complex tau = poles[j].location;
    const Index m = poles[j].multiplicity;

    // Monic product of the remaining pole factors.
    Polynomial qtail = Polynomial::constant(Complex(1.0));
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if (i == j) continue;
      CVector rep = CVector::Constant(poles[i].multiplicity, poles[i].location);
      qtail = qtail * monic_from_roots(rep);
    }

    const Polynomial p_local = taylor_shift(num, tau);
    const Polynomial q_local = taylor_shift(qtail, tau);
    const CVector g = power_series_divide(p_local.coeffs(), q_local.coeffs(), m);

    // Top coefficient g(0) = num(tau) / qtail(tau); a vanishing num(tau)
    // means the pole cancels.
    double num_scale = 0.0;
    const double abs_tau = std::max(1.0, std::abs(tau));
    double power = 1.0;
    for (Index i = 0; i <= num.degree(); ++i, power *= abs_tau)
      num_scale += std::abs(num.coeff(i)) * power;
    if (std::abs(p_local.coeff(0)) <= irreducible_tol * num_scale)
      throw NotIrreducibleError("expand_over_poles: numerator vanishes at a pole");

    CVector a(m);
    for (Index l = 0; l < m; ++l) a(l) = g(m - 1 - l) / detail::factorial(l);
    spikes.push_back({tau, std::move(a)});
  }
  return Signal(std::move(spikes));
}

Signal partial_fractions(const RationalFunction& r, double cluster_tol) {
  if (r.pole_degree() == 0) return Signal{};
  const std::vector<Pole> poles = find_poles(r.denominator(), cluster_tol);
  return expand_over_poles(r.numerator(), poles);
}

}  // namespace prony
