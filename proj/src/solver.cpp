#include "prony/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "prony/detail/factorials.hpp"
#include "prony/errors.hpp"
#include "prony/pade.hpp"
#include "prony/stieltjes.hpp"

namespace prony {

namespace {

double condition_of(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma(sigma.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return sigma(0) / sigma(sigma.size() - 1);
}

// Confluent Vandermonde block layout with an arbitrary row count.
CMatrix vandermonde_rows(const CVector& nodes, const std::vector<Index>& mult, Index rows) {
  Index d = 0;
  for (Index m : mult) d += m;
  CMatrix v = CMatrix::Zero(rows, d);
  Index col = 0;
  for (Index j = 0; j < nodes.size(); ++j) {
    CVector powers(rows);
    powers(0) = Complex(1.0);
    for (Index p = 1; p < rows; ++p) powers(p) = powers(p - 1) * nodes(j);
    for (Index l = 0; l < mult[static_cast<std::size_t>(j)]; ++l, ++col)
      for (Index k = l; k < rows; ++k)
        v(k, col) = detail::falling_factorial(k, l) * powers(k - l);
  }
  return v;
}

// Parameter packing for the fixed-multiplicity Newton iterations: per node j,
// the amplitudes a_{j,0}..a_{j,d_j-1} followed by the node x_j.
CVector pack_parameters(const Signal& f) {
  CVector p(f.rank() + f.support_size());
  Index pos = 0;
  for (const Spike& s : f.support()) {
    p.segment(pos, s.amplitudes.size()) = s.amplitudes;
    pos += s.amplitudes.size();
    p(pos++) = s.node;
  }
  return p;
}

MomentVector moments_from_parameters(const CVector& p, const std::vector<Index>& d0,
                                     Index count) {
  MomentVector m = MomentVector::Zero(count);
  Index pos = 0;
  for (Index dj : d0) {
    const CVector a = p.segment(pos, dj);
    const Complex x = p(pos + dj);
    pos += dj + 1;
    CVector powers(count);
    powers(0) = Complex(1.0);
    for (Index k = 1; k < count; ++k) powers(k) = powers(k - 1) * x;
    for (Index k = 0; k < count; ++k)
      for (Index l = 0; l <= std::min<Index>(k, dj - 1); ++l)
        m(k) += detail::falling_factorial(k, l) * a(l) * powers(k - l);
  }
  return m;
}

CMatrix jacobian_from_parameters(const CVector& p, const std::vector<Index>& d0) {
  const Index s0 = static_cast<Index>(d0.size());
  CVector nodes(s0);
  std::vector<Index> extended(d0.size());
  Index pos = 0;
  for (Index j = 0; j < s0; ++j) {
    const Index dj = d0[static_cast<std::size_t>(j)];
    nodes(j) = p(pos + dj);
    extended[static_cast<std::size_t>(j)] = dj + 1;
    pos += dj + 1;
  }
  for (Index i = 0; i < s0; ++i)
    for (Index j = i + 1; j < s0; ++j)
      if (std::abs(nodes(i) - nodes(j)) <= kNodeMergeTol)
        throw DegenerateJacobianError(
            "invert_multiplicity_restricted: collided nodes give a singular Jacobian");

  const Index n = p.size();
  CMatrix v = vandermonde_rows(nodes, extended, n);
  CMatrix e = CMatrix::Zero(n, n);
  Index offset = 0;
  pos = 0;
  for (Index dj : d0) {
    for (Index i = 0; i < dj; ++i) e(offset + i, offset + i) = Complex(1.0);
    for (Index i = 1; i <= dj; ++i) e(offset + i, offset + dj) = p(pos + i - 1);
    offset += dj + 1;
    pos += dj + 1;
  }
  return v * e;
}

Signal signal_from_parameters(const CVector& p, const std::vector<Index>& d0) {
  std::vector<Spike> spikes;
  Index pos = 0;
  for (Index dj : d0) {
    spikes.push_back({p(pos + dj), p.segment(pos, dj).eval()});
    pos += dj + 1;
  }
  return Signal(std::move(spikes));
}

// A few plain Newton steps on the fixed-structure system, keeping the iterate
// with the smallest residual. Used to sharpen nodes and amplitudes whose seed
// already sits deep inside the convergence basin.
Signal newton_polish(const Signal& seed, const MomentVector& mu) {
  const Index head = seed.rank() + seed.support_size();
  if (seed.is_zero() || head > mu.size()) return seed;
  const std::vector<Index> d0 = seed.multiplicities();
  const MomentVector target = mu.head(head);

  CVector p = pack_parameters(seed);
  CVector best = p;
  double best_norm = (moments_from_parameters(p, d0, head) - target).norm();
  for (int iter = 0; iter < 4 && best_norm > 0.0; ++iter) {
    CMatrix jac;
    try {
      jac = jacobian_from_parameters(p, d0);
    } catch (const Error&) {
      break;
    }
    const CVector residual = moments_from_parameters(p, d0, head) - target;
    p += jac.partialPivLu().solve(-residual);
    const double norm = (moments_from_parameters(p, d0, head) - target).norm();
    if (norm >= best_norm) break;
    best_norm = norm;
    best = p;
  }
  return signal_from_parameters(best, d0);
}

Signal expand_rational(const RationalFunction& r, double cluster_tol,
                       const MomentVector& mu) {
  const CVector roots = polynomial_roots(r.denominator());
  if (cluster_tol < 0.0) cluster_tol = default_cluster_tol(roots.cwiseAbs().maxCoeff());
  const std::vector<Pole> poles = cluster_roots(roots, cluster_tol);
  expand_over_poles(r.numerator(), poles);  // irreducibility gate

  // The series-division amplitudes inherit the Hankel conditioning; refit them
  // against the full moment window on the (well-conditioned) linear part, then
  // polish nodes and amplitudes together.
  CVector nodes(static_cast<Index>(poles.size()));
  std::vector<Index> mult(poles.size());
  for (std::size_t j = 0; j < poles.size(); ++j) {
    nodes(static_cast<Index>(j)) = poles[j].location;
    mult[j] = poles[j].multiplicity;
  }
  const CMatrix v = vandermonde_rows(nodes, mult, mu.size());
  const CVector a = v.colPivHouseholderQr().solve(mu);
  std::vector<Spike> spikes(poles.size());
  Index pos = 0;
  for (std::size_t j = 0; j < poles.size(); ++j) {
    spikes[j] = {poles[j].location, a.segment(pos, mult[j]).eval()};
    pos += mult[j];
  }
  return newton_polish(Signal(std::move(spikes)), mu);
}

ConfluentVandermonde vandermonde_with_condition(const CVector& nodes,
                                                const std::vector<Index>& mult) {
  ConfluentVandermonde v = confluent_vandermonde(nodes, mult);
  v.condition = condition_of(v.matrix);
  return v;
}

void fill_common_diagnostics(SolveResult& out, const MomentVector& mu) {
  out.diagnostics.moment_residual =
      out.signal.is_zero() && mu.norm() == 0.0
          ? 0.0
          : (moments(out.signal, mu.size()) - mu).norm() / std::max(mu.norm(), 1e-300);
  if (!out.signal.is_zero())
    out.diagnostics.vandermonde_condition =
        vandermonde_with_condition(out.signal.nodes(), out.signal.multiplicities()).condition;
}

}  // namespace

ConfluentVandermonde confluent_vandermonde(const CVector& nodes,
                                           const std::vector<Index>& multiplicities) {
  if (static_cast<std::size_t>(nodes.size()) != multiplicities.size())
    throw std::invalid_argument("confluent_vandermonde: nodes/multiplicities size mismatch");
  if (nodes.size() == 0)
    throw std::invalid_argument("confluent_vandermonde: empty node list");
  for (Index i = 0; i < nodes.size(); ++i) {
    if (multiplicities[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("confluent_vandermonde: multiplicities must be >= 1");
    for (Index j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes(i) - nodes(j)) <= kNodeMergeTol)
        throw std::invalid_argument("confluent_vandermonde: repeated node");
  }
  Index d = 0;
  for (Index m : multiplicities) d += m;
  return {vandermonde_rows(nodes, multiplicities, d), nodes, multiplicities, 0.0};
}

CVector solve_linear_part(const CVector& nodes,
                          const std::vector<Index>& multiplicities,
                          const MomentVector& mu_head) {
  const ConfluentVandermonde v = vandermonde_with_condition(nodes, multiplicities);
  if (mu_head.size() != v.matrix.rows())
    throw std::invalid_argument("solve_linear_part: needs the first d moments");
  if (!(v.condition < kConditionLimit))
    throw ConditioningError("solve_linear_part: Vandermonde matrix numerically singular");
  const CVector a = v.matrix.colPivHouseholderQr().solve(mu_head);
  const double residual = (v.matrix * a - mu_head).norm();
  if (residual > 1e-9 * std::max(mu_head.norm(), 1e-300) * v.condition)
    throw ConditioningError("solve_linear_part: residual above conditioning threshold");
  return a;
}

SolveResult invert_prony(const MomentVector& mu, Index d, const SolveOptions& options) {
  const PadeResult pade = pade_solve(mu, d, options.rank_tol);
  SolveResult out;
  out.diagnostics.rank = pade.rank();
  out.diagnostics.stratum = pade.report.stratum;
  out.diagnostics.leading_minor = pade.report.leading_minor;
  out.diagnostics.pade_condition = pade.condition;
  out.diagnostics.agreement_order = agreement_order(mu, pade.rational);
  if (pade.rank() > 0) out.signal = expand_rational(pade.rational, options.cluster_tol, mu);
  fill_common_diagnostics(out, mu);
  return out;
}

SolveResult invert_rank_restricted(const MomentVector& mu, Index r,
                                   const RankRestrictedOptions& options) {
  if (r < 1) throw std::invalid_argument("invert_rank_restricted: r must be >= 1");
  if (mu.size() != 2 * r)
    throw std::invalid_argument("invert_rank_restricted: needs exactly 2r moments");

  SolveResult out;
  out.diagnostics.rank = r;
  if (options.collision_tolerant) {
    CollisionSolveResult c =
        solve_with_collisions(mu, r, options.cluster_tol, options.collision);
    out.signal = std::move(c.signal);
    out.diagnostics.pade_condition = c.denominator_condition;
    out.diagnostics.basis_condition = c.basis_condition;
  } else {
    double cond = 1.0;
    const Polynomial q = solve_denominator(mu, r, &cond);
    const Polynomial p = solve_numerator(mu, q);
    const RationalFunction rational(p, q);
    out.signal = expand_rational(rational, options.cluster_tol, mu);
    out.diagnostics.pade_condition = cond;
    out.diagnostics.agreement_order = agreement_order(mu, rational);
  }
  fill_common_diagnostics(out, mu);
  return out;
}

SolveResult invert_multiplicity_restricted(const MomentVector& mu_star,
                                           const std::vector<Index>& d0,
                                           const Signal& initial,
                                           const NewtonOptions& options) {
  const Index s0 = static_cast<Index>(d0.size());
  Index r0 = 0;
  for (Index dj : d0) {
    if (dj < 1)
      throw std::invalid_argument("invert_multiplicity_restricted: multiplicities must be >= 1");
    r0 += dj;
  }
  if (mu_star.size() != s0 + r0)
    throw std::invalid_argument(
        "invert_multiplicity_restricted: needs the first s0 + r0 moments");
  if (initial.multiplicities() != d0)
    throw std::invalid_argument(
        "invert_multiplicity_restricted: initial guess must have multiplicity vector D0");

  const double target = options.residual_tol * std::max(mu_star.norm(), 1e-300);
  CVector p = pack_parameters(initial);
  CVector residual = moments_from_parameters(p, d0, mu_star.size()) - mu_star;
  double norm = residual.norm();
  double jac_condition = 0.0;

  Index iter = 0;
  for (; iter < options.max_iterations && norm > target; ++iter) {
    const CMatrix jac = jacobian_from_parameters(p, d0);
    jac_condition = condition_of(jac);
    if (!(jac_condition < kConditionLimit))
      throw DegenerateJacobianError(
          "invert_multiplicity_restricted: Jacobian numerically singular");
    const CVector step = jac.partialPivLu().solve(-residual);

    double alpha = 1.0;
    bool accepted = false;
    for (Index h = 0; h <= options.max_step_halvings; ++h, alpha *= 0.5) {
      const CVector candidate = p + alpha * step;
      const CVector cres = moments_from_parameters(candidate, d0, mu_star.size()) - mu_star;
      if (cres.norm() < norm || cres.norm() <= target) {
        p = candidate;
        residual = cres;
        norm = cres.norm();
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw NoConvergenceError("invert_multiplicity_restricted: step halving stalled");
  }
  if (norm > target)
    throw NoConvergenceError("invert_multiplicity_restricted: residual target not reached");

  SolveResult out;
  out.signal = signal_from_parameters(p, d0);
  out.diagnostics.rank = r0;
  out.diagnostics.iterations = iter;
  out.diagnostics.vandermonde_condition = jac_condition;
  out.diagnostics.moment_residual = norm / std::max(mu_star.norm(), 1e-300);
  return out;
}

JacobianFactorization jacobian_factorization(const Signal& f) {
  if (f.is_zero())
    throw std::invalid_argument("jacobian_factorization: zero signal");
  const std::vector<Index> d = f.multiplicities();
  std::vector<Index> extended(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) extended[j] = d[j] + 1;

  JacobianFactorization fact;
  fact.vandermonde = vandermonde_with_condition(f.nodes(), extended);
  const Index n = fact.vandermonde.matrix.rows();
  fact.scaling = CMatrix::Zero(n, n);
  Index offset = 0;
  for (const Spike& s : f.support()) {
    const Index dj = s.amplitudes.size();
    for (Index i = 0; i < dj; ++i) fact.scaling(offset + i, offset + i) = Complex(1.0);
    for (Index i = 1; i <= dj; ++i) fact.scaling(offset + i, offset + dj) = s.amplitudes(i - 1);
    offset += dj + 1;
  }
  return fact;
}

ErrorBoundReport error_bounds(const Signal& f, double eps) {
  if (eps < 0.0) throw std::invalid_argument("error_bounds: eps must be >= 0");
  if (f.support_size() < 2)
    throw UndefinedSeparationError(
        "error_bounds: separation undefined for fewer than two nodes");

  ErrorBoundReport report;
  report.eps = eps;
  report.support_size = f.support_size();
  report.rank = f.rank();

  const CVector x = f.nodes();
  double delta = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = i + 1; j < x.size(); ++j)
      delta = std::min(delta, std::abs(x(i) - x(j)));
  report.separation = delta;

  const double n = static_cast<double>(report.support_size + report.rank);
  const double base = std::pow(2.0 / delta, n);
  for (const Spike& s : f.support()) {
    const Index dj = s.amplitudes.size();
    const double top = std::abs(s.amplitudes(dj - 1));
    report.node_bounds.push_back(2.0 / detail::factorial(dj) * base / top * eps);
    std::vector<double> amp(static_cast<std::size_t>(dj));
    for (Index l = 0; l < dj; ++l) {
      const double prev = l == 0 ? 0.0 : std::abs(s.amplitudes(l - 1));
      amp[static_cast<std::size_t>(l)] = 2.0 / detail::factorial(l) * base *
                                         std::pow(0.5 + n / delta, static_cast<double>(dj - l)) *
                                         (1.0 + prev / top) * eps;
    }
    report.amplitude_bounds.push_back(std::move(amp));
  }
  return report;
}

double hankel_factorization_check(const Signal& f) {
  const Index r = f.rank();
  if (r == 0) return 0.0;
  const MomentVector mu = moments(f, 2 * r);
  const CMatrix m = hankel_square(mu, r);

  const CMatrix v = confluent_vandermonde(f.nodes(), f.multiplicities()).matrix;
  CMatrix a = CMatrix::Zero(r, r);
  Index offset = 0;
  for (const Spike& s : f.support()) {
    const Index dj = s.amplitudes.size();
    for (Index p = 0; p < dj; ++p)
      for (Index q = 0; p + q < dj; ++q)
        a(offset + p, offset + q) = detail::binomial(p + q, p) * s.amplitudes(p + q);
    offset += dj;
  }
  const CMatrix rebuilt = v * a * v.transpose();
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  return (rebuilt - m).cwiseAbs().maxCoeff() / scale;
}

}  // namespace prony
