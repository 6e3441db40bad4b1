// Acceptance suite: ten end-to-end criteria covering the worked examples, the
// solvability table, both restricted formulations, the collision machinery,
// and the factorization identities. One pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "prony/collision.hpp"
#include "prony/divided_differences.hpp"
#include "prony/errors.hpp"
#include "prony/pade.hpp"
#include "prony/solver.hpp"
#include "prony/stieltjes.hpp"
#include "test_support.hpp"

using namespace prony;
using namespace testsupport;

namespace {

int g_failed = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str());
  if (!ok) ++g_failed;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MomentVector near_unsolvable_moments(double eps) {
  return make_cvector({Complex(0.0), Complex(eps), Complex(1.0), Complex(0.0)});
}

// ---- criterion 1: the worked 2x2 example in closed form ----

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0;
  for (double eps : {0.1, 0.01}) {
    const SolveResult res = invert_prony(near_unsolvable_moments(eps), 2);
    const Complex i(0.0, 1.0);
    const Complex root3 = std::sqrt(Complex(3.0));
    const Complex x1 = (1.0 + i * root3) / (2.0 * eps);
    const Complex a1 = eps * eps / (i * root3);
    const std::vector<std::pair<Complex, Complex>> expected = {{x1, a1},
                                                               {std::conj(x1), -a1}};
    ok = ok && res.signal.support_size() == 2;
    for (const auto& [node, amp] : expected) {
      double best_node = 1e300, best_amp = 1e300;
      for (const Spike& s : res.signal.support()) {
        const double node_err = std::abs(s.node - node) / std::abs(node);
        if (node_err < best_node) {
          best_node = node_err;
          best_amp = std::abs(s.amplitudes(0) - amp) / std::abs(amp);
        }
      }
      worst = std::max({worst, best_node, best_amp});
    }
    ok = ok && res.diagnostics.moment_residual < 1e-10;
  }
  ok = ok && worst < 1e-8;
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 1.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst relative error %.2e, %.3f s", worst, elapsed);
  report(1, "closed-form inversion next to the unsolvable stratum", ok, detail);
}

// ---- criterion 2: rank and solvability table of the impulse vectors ----

void criterion_2() {
  bool ok = true;
  for (Index l = 0; l <= 9; ++l) {
    const Index expected_rank = l <= 4 ? l + 1 : 10 - l;
    const SolvabilityReport a = classify(impulse_moments(5, l), 5);
    ok = ok && a.rank == expected_rank && a.solvable() == (l <= 4);
    ok = ok && numeric_rank(build_hankel(impulse_moments(5, l), 5)) == expected_rank;

    CVector ones = CVector::Zero(10);
    for (Index k = l; k < 10; ++k) ones(k) = Complex(1.0);
    const SolvabilityReport b = classify(ones, 5);
    ok = ok && b.rank == expected_rank && b.solvable() == (l <= 4);
  }
  report(2, "impulse moment table at order 5, with the ones-tail variant", ok,
         ok ? "all 20 exact matches" : "mismatch");
}

// ---- criterion 3: two-impulse vector, full vs rank-restricted ----

void criterion_3() {
  CVector mu28 = CVector::Zero(10);
  mu28(2) = Complex(1.0);
  mu28(8) = Complex(1.0);
  const SolvabilityReport report28 = classify(mu28, 5);
  bool ok = report28.rank == 5 && !report28.solvable();
  bool threw = false;
  try {
    invert_prony(mu28, 5);
  } catch (const UnsolvableError& e) {
    threw = e.rank() == 5;
  }
  ok = ok && threw;

  const Signal half_dd(
      {{Complex(0.0), make_cvector({Complex(0.0), Complex(0.0), Complex(0.5)})}});
  for (double eps : {0.0, 1e-6, 1e-3}) {
    CVector full = mu28;
    full(8) = Complex(eps);
    try {
      const SolveResult res = invert_rank_restricted(full.head(6), 3);
      ok = ok && signal_distance(res.signal, half_dd) < 1e-10;
    } catch (const Error&) {
      ok = false;
    }
  }
  report(3, "unsolvable at full order, solvable after rank restriction", ok,
         ok ? "stratum and all three truncations match" : "mismatch");
}

// ---- criterion 4: round-trip property suite ----

void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1404);
  double worst = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Signal f = random_signal(rng, {.max_support = 4,
                                         .max_multiplicity = 3,
                                         .max_rank = 6,
                                         .min_separation = 0.5,
                                         .node_radius = 2.0});
    try {
      const SolveResult res = invert_prony(moments(f, 12), 6);
      const double dist = signal_distance(res.signal, f);
      worst = std::max(worst, dist);
      if (!(dist < 1e-6)) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = failures == 0 && elapsed < 30.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "200 signals, worst distance %.2e, %.2f s", worst,
                elapsed);
  report(4, "random round trips through the full inversion", ok, detail);
}

// ---- criterion 5: collision resolution along the shrinking family ----

void criterion_5() {
  const double t = 0.5;
  bool ok = true;
  double worst_beta = 0.0, worst_ratio = 1.0;
  for (Index i = 0; i <= 12; ++i) {
    const double eps = 1e-1 * std::pow(1e-3, static_cast<double>(i) / 12.0);
    MomentVector mu(4);
    for (Index k = 0; k < 4; ++k)
      mu(k) = (std::pow(Complex(t + eps), static_cast<double>(k)) -
               std::pow(Complex(t), static_cast<double>(k))) /
              eps;
    const CollisionSolveResult res = solve_with_collisions(mu, 2, 0.3);
    worst_beta = std::max({worst_beta, std::abs(res.beta(0)),
                           std::abs(res.beta(1) - Complex(1.0))});
    double amp = 0.0;
    for (const Spike& s : res.signal.support())
      amp = std::max(amp, s.amplitudes.cwiseAbs().maxCoeff());
    const double ratio = amp * eps;
    worst_ratio = std::max({worst_ratio, ratio, 1.0 / ratio});
  }
  ok = ok && worst_beta < 1e-6 && worst_ratio < 1.01;

  // exact collision: the double-root input comes back as the derivative impulse
  MomentVector mu0(4);
  for (Index k = 0; k < 4; ++k)
    mu0(k) = static_cast<double>(k) * std::pow(Complex(t), static_cast<double>(k - 1));
  mu0(0) = Complex(0.0);
  const CollisionSolveResult res0 = solve_with_collisions(mu0, 2, 0.3);
  const Signal derivative_impulse({{Complex(t), make_cvector({Complex(0.0), Complex(1.0)})}});
  const double dist0 = signal_distance(res0.signal, derivative_impulse);
  ok = ok && dist0 < 1e-8;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "worst |beta - (0,1)| %.2e, amp/(1/eps) within %.4f, collision distance %.2e",
                worst_beta, worst_ratio, dist0);
  report(5, "basis coefficients stay bounded while amplitudes blow up", ok, detail);
}

// ---- criterion 6: nodes escape to infinity at the closed-form rate ----

void criterion_6() {
  bool ok = true;
  double previous = 0.0;
  double worst = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    // the rank gate must sit below sigma_min/sigma_max(M_2) = eps^2
    const SolveResult res = invert_prony(near_unsolvable_moments(eps), 2, {.rank_tol = 1e-12});
    double max_node = 0.0;
    for (const Spike& s : res.signal.support())
      max_node = std::max(max_node, std::abs(s.node));
    worst = std::max(worst, std::abs(max_node - 1.0 / eps) * eps);
    ok = ok && std::abs(max_node - 1.0 / eps) < 1e-9 / eps;
    ok = ok && max_node > previous;
    previous = max_node;
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst relative deviation from 1/eps: %.2e", worst);
  report(6, "largest node grows exactly like 1/eps towards the stratum", ok, detail);
}

// ---- criterion 7: divided-difference law suite ----

void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1407);
  bool ok = true;
  int instances = 0;

  const auto random_nodes = [&](Index n) {
    NodeVector w(n);
    for (Index i = 0; i < n; ++i)
      w(i) = (i > 0 && uniform01(rng) < 0.3)
                 ? w(static_cast<Index>(uniform01(rng) * static_cast<double>(i)))
                 : random_disc(rng, 2.0);
    return w;
  };

  // permutation symmetry
  for (int trial = 0; trial < 125; ++trial, ++instances) {
    const Index n = 2 + static_cast<Index>(uniform01(rng) * 4.0);
    NodeVector w = random_nodes(n);
    NodeVector shuffled = w;
    for (Index i = n - 1; i > 0; --i) {
      const Index j = static_cast<Index>(uniform01(rng) * static_cast<double>(i + 1));
      std::swap(shuffled(i), shuffled(j));
    }
    const Index k = static_cast<Index>(uniform01(rng) * 9.0);
    const Complex a = dd_evaluate(w, k), b = dd_evaluate(shuffled, k);
    ok = ok && std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a));
  }

  // annihilation below the order and unit leading coefficient
  for (int trial = 0; trial < 125; ++trial, ++instances) {
    const Index n = 1 + static_cast<Index>(uniform01(rng) * 5.0);
    const NodeVector w = random_nodes(n);
    for (Index k = 0; k + 1 < n; ++k) ok = ok && std::abs(dd_evaluate(w, k)) < 1e-9;
    ok = ok && std::abs(dd_evaluate(w, n - 1) - Complex(1.0)) < 1e-9;
  }

  // delta expansion reproduces the recursive values on monomials
  for (int trial = 0; trial < 125; ++trial, ++instances) {
    const Index n = 1 + static_cast<Index>(uniform01(rng) * 4.0);
    const NodeVector w = random_nodes(n);
    const MomentVector m = moments(chakalov_expansion(w), 10);
    for (Index k = 0; k <= 9; ++k) {
      const Complex direct = dd_evaluate(w, k);
      ok = ok && std::abs(m(k) - direct) <= 1e-10 * (1.0 + std::abs(direct));
    }
  }

  // kernel identity
  for (int trial = 0; trial < 63; ++trial, ++instances) {
    const Index n = 1 + static_cast<Index>(uniform01(rng) * 4.0);
    const NodeVector w = random_nodes(n);
    const Complex z = random_disc(rng, 1.5) + Complex(4.0, 3.0);
    Complex q(1.0);
    for (Index i = 0; i < n; ++i) q *= z - w(i);
    ok = ok && std::abs(dd_on_cauchy_kernel(w, z) * q - Complex(1.0)) < 1e-10;
  }

  // refinement: subsequence differences lie in the span of consecutive windows
  for (int trial = 0; trial < 62; ++trial, ++instances) {
    const Index n = 3 + static_cast<Index>(uniform01(rng) * 3.0);
    const NodeVector w = random_nodes(n);
    const Index k = 2 + static_cast<Index>(uniform01(rng) * static_cast<double>(n - 2));
    std::vector<Index> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), Index{0});
    for (Index i = n - 1; i > 0; --i) {
      const Index j = static_cast<Index>(uniform01(rng) * static_cast<double>(i + 1));
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    std::vector<Index> sigma(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(sigma.begin(), sigma.end());
    NodeVector target(k);
    for (Index i = 0; i < k; ++i) target(i) = w(sigma[static_cast<std::size_t>(i)]);

    std::vector<NodeVector> windows;
    for (Index j = sigma.front(); j + k - 1 <= sigma.back(); ++j)
      windows.push_back(w.segment(j, k).eval());
    CMatrix a(2 * n, static_cast<Index>(windows.size()));
    CVector b(2 * n);
    for (Index row = 0; row < 2 * n; ++row) {
      for (std::size_t c = 0; c < windows.size(); ++c)
        a(row, static_cast<Index>(c)) = dd_evaluate(windows[c], row);
      b(row) = dd_evaluate(target, row);
    }
    const CVector beta = a.colPivHouseholderQr().solve(b);
    ok = ok && (a * beta - b).norm() <= 1e-9 * std::max(b.norm(), 1.0);
  }

  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 10.0 && instances == 500;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d instances, %.2f s", instances, elapsed);
  report(7, "divided-difference laws", ok, detail);
}

// ---- criterion 8: prefix collections are bases exactly under subordination ----

void criterion_8() {
  bool ok = true;
  int cases = 0;
  const std::vector<Complex> values = {Complex(0.6, 0.1), Complex(-1.2, 0.4),
                                       Complex(0.2, -0.9), Complex(-0.3, -0.5)};

  const auto run_case = [&](const std::vector<std::vector<Index>>& pattern,
                            const std::vector<std::vector<Index>>& blocks) {
    Index r = 0;
    for (const auto& cls : pattern) r += static_cast<Index>(cls.size());
    NodeVector w(r);
    for (std::size_t cls = 0; cls < pattern.size(); ++cls)
      for (Index i : pattern[cls]) w(i) = values[cls];
    const Configuration c(blocks);
    Eigen::JacobiSVD<CMatrix> svd(collocation_matrix(w, c));
    const double ratio = svd.singularValues()(r - 1) / svd.singularValues()(0);
    if (is_subordinated(w, c))
      ok = ok && ratio > 1e-6;
    else
      ok = ok && ratio < 1e-10;
    ++cases;
  };

  for (Index r : {2, 3}) {
    const auto patterns = set_partitions(r);
    for (const auto& pattern : patterns)
      for (const auto& blocks : patterns) run_case(pattern, blocks);
  }
  const std::vector<std::vector<std::vector<Index>>> patterns4 = {
      {{0}, {1}, {2}, {3}},  // all distinct
      {{0, 1}, {2}, {3}},    // adjacent pair equal
      {{0, 2}, {1}, {3}},    // split pair equal
      {{0, 1, 2, 3}},        // all equal
  };
  for (const auto& pattern : patterns4)
    for (const auto& blocks : set_partitions(4)) run_case(pattern, blocks);

  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d enumerated cases, both directions", cases);
  report(8, "collocation is nonsingular iff subordinated", ok && cases <= 100, detail);
}

// ---- criterion 9: factorization identities ----

void criterion_9() {
  std::mt19937_64 rng(1409);
  bool ok = true;
  double worst_hankel = 0.0, worst_jacobian = 0.0;

  for (int trial = 0; trial < 50; ++trial) {
    const Signal f = random_signal(rng, {.max_support = 2, .max_multiplicity = 3, .max_rank = 4});
    worst_hankel = std::max(worst_hankel, hankel_factorization_check(f));
  }
  ok = ok && worst_hankel <= 1e-10;

  for (int trial = 0; trial < 50; ++trial) {
    const Signal f = random_signal(rng, {.max_support = 2, .max_multiplicity = 2, .max_rank = 4});
    const std::vector<Index> d0 = f.multiplicities();
    const Index n = f.rank() + f.support_size();
    CVector params(n);
    Index pos = 0;
    for (const Spike& s : f.support()) {
      params.segment(pos, s.amplitudes.size()) = s.amplitudes;
      pos += s.amplitudes.size();
      params(pos++) = s.node;
    }
    const CMatrix analytic = jacobian_factorization(f).jacobian();
    const auto forward = [&](const CVector& p) {
      std::vector<Spike> spikes;
      Index q = 0;
      for (Index dj : d0) {
        spikes.push_back({p(q + dj), p.segment(q, dj).eval()});
        q += dj + 1;
      }
      return moments(Signal(std::move(spikes)), n);
    };
    const double h = 1e-6;
    for (Index col = 0; col < n; ++col) {
      CVector plus = params, minus = params;
      plus(col) += h;
      minus(col) -= h;
      const CVector fd = (forward(plus) - forward(minus)) / (2.0 * h);
      for (Index row = 0; row < n; ++row)
        worst_jacobian = std::max(worst_jacobian, std::abs(analytic(row, col) - fd(row)) /
                                                      (1.0 + std::abs(fd(row))));
    }
  }
  ok = ok && worst_jacobian <= 1e-6;

  char detail[128];
  std::snprintf(detail, sizeof(detail), "hankel %.2e (<=1e-10), jacobian vs FD %.2e (<=1e-6)",
                worst_hankel, worst_jacobian);
  report(9, "hankel and jacobian factorizations", ok, detail);
}

// ---- criterion 10: perturbation bounds dominate observed errors ----

void criterion_10() {
  std::mt19937_64 rng(1410);
  const double eps = 1e-8;
  bool ok = true;
  int trials = 0;
  double worst_ratio = 0.0;
  while (trials < 100) {
    // rank-2 signals with unit-disc nodes and separation >= 1 (the regime of
    // the bound constants)
    Complex x1, x2;
    do {
      x1 = random_disc(rng, 1.0);
      x2 = random_disc(rng, 1.0);
    } while (std::abs(x1 - x2) < 1.0);
    const Signal f({{x1, make_cvector({random_modulus(rng, 0.5, 2.0)})},
                    {x2, make_cvector({random_modulus(rng, 0.5, 2.0)})}});
    MomentVector noisy = moments(f, 4);
    for (Index k = 0; k < 4; ++k) noisy(k) += random_disc(rng, eps);
    ++trials;
    try {
      const SolveResult res = invert_multiplicity_restricted(noisy, {1, 1}, f);
      const ErrorBoundReport bounds = error_bounds(f, eps);
      for (Index j = 0; j < 2; ++j) {
        const double node_err = std::abs(res.signal.support()[j].node - f.support()[j].node);
        const double amp_err =
            std::abs(res.signal.support()[j].amplitudes(0) - f.support()[j].amplitudes(0));
        worst_ratio = std::max({worst_ratio, node_err / bounds.node_bounds[j],
                                amp_err / bounds.amplitude_bounds[j][0]});
      }
    } catch (const Error&) {
      ok = false;
    }
  }
  ok = ok && worst_ratio <= 1.0;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "100 trials, worst observed/bound ratio %.3f", worst_ratio);
  report(10, "first-order errors stay below the perturbation bounds", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failed == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failed);
  return 1;
}
