#include <doctest.h>

#include "prony/signal.hpp"
#include "test_support.hpp"

using namespace prony;
using namespace testsupport;

TEST_CASE("moments of a single simple node are a geometric sequence") {
  const Signal f({{Complex(3.0), make_cvector({Complex(2.0)})}});
  const MomentVector m = moments(f, 4);
  CHECK(m(0) == Complex(2.0));
  CHECK(m(1) == Complex(6.0));
  CHECK(m(2) == Complex(18.0));
  CHECK(m(3) == Complex(54.0));
}

TEST_CASE("moments of a first-derivative impulse at the origin") {
  const Signal f({{Complex(0.0), make_cvector({Complex(0.0), Complex(1.0)})}});
  const MomentVector m = moments(f, 4);
  CHECK(m(0) == Complex(0.0));
  CHECK(m(1) == Complex(1.0));
  CHECK(m(2) == Complex(0.0));
  CHECK(m(3) == Complex(0.0));
}

TEST_CASE("moments of a near-collided pair match direct summation") {
  const double t = 1.0, eps = 0.1;
  const Signal f({{Complex(t), make_cvector({Complex(-10.0)})},
                  {Complex(t + eps), make_cvector({Complex(10.0)})}});
  const MomentVector m = moments(f, 4);
  for (Index k = 0; k < 4; ++k) {
    const Complex direct = -10.0 * std::pow(Complex(t), static_cast<double>(k)) +
                           10.0 * std::pow(Complex(t + eps), static_cast<double>(k));
    CHECK(rel_error(m(k), direct) < 1e-14);
  }
  CHECK(std::abs(m(0)) < 1e-14);
  CHECK(rel_error(m(1), Complex(1.0)) < 1e-13);
  CHECK(rel_error(m(2), Complex(2.1)) < 1e-13);
  CHECK(rel_error(m(3), Complex(3.31)) < 1e-13);
}

TEST_CASE("single-node moments agree with symbolic differentiation of x^k") {
  // Independent route: m_k = sum_l a_l (d/dx)^l [x^k] evaluated at x, with the
  // derivative taken on the coefficient list.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 1 + static_cast<Index>(uniform01(rng) * 3.0);
    const Complex x = random_disc(rng, 2.0);
    CVector a(d);
    for (Index l = 0; l < d; ++l) a(l) = random_modulus(rng, 0.5, 2.0);
    const Signal f({{x, a}});
    const MomentVector m = moments(f, 7);
    for (Index k = 0; k <= 6; ++k) {
      Complex expected(0.0);
      for (Index l = 0; l < d; ++l) {
        // differentiate x^k l times symbolically
        std::vector<double> coeff(static_cast<std::size_t>(k) + 1, 0.0);
        coeff[static_cast<std::size_t>(k)] = 1.0;
        for (Index step = 0; step < l; ++step) {
          std::vector<double> next(coeff.size(), 0.0);
          for (std::size_t p = 1; p < coeff.size(); ++p)
            next[p - 1] = coeff[p] * static_cast<double>(p);
          coeff = std::move(next);
        }
        Complex val(0.0);
        Complex power(1.0);
        for (double c : coeff) {
          val += c * power;
          power *= x;
        }
        expected += a(l) * val;
      }
      CHECK(rel_error(m(k), expected) < 1e-12);
    }
  }
}

TEST_CASE("moments are linear in the signal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Signal a = random_signal(rng, {.max_support = 3, .max_multiplicity = 2});
    const Signal b = random_signal(rng, {.max_support = 2, .max_multiplicity = 3});
    const MomentVector sum = moments(a + b, 8);
    const MomentVector parts = moments(a, 8) + moments(b, 8);
    CHECK(rel_error(sum, parts) < 1e-12);
  }
}

TEST_CASE("construction merges equal nodes and trims zero top amplitudes") {
  const Signal merged({{Complex(1.0), make_cvector({Complex(2.0)})},
                       {Complex(1.0) + Complex(1e-13), make_cvector({Complex(3.0)})}});
  CHECK(merged.support_size() == 1);
  CHECK(merged.support()[0].amplitudes(0) == Complex(5.0));

  const Signal trimmed({{Complex(2.0), make_cvector({Complex(1.0), Complex(0.0)})}});
  CHECK(trimmed.rank() == 1);

  const Signal cancelled({{Complex(1.0), make_cvector({Complex(2.0)})},
                          {Complex(1.0), make_cvector({Complex(-2.0)})}});
  CHECK(cancelled.is_zero());
}

TEST_CASE("configuration of a node vector") {
  const NodeVector w = make_cvector({Complex(3.0), Complex(1.0), Complex(2.0), Complex(1.0),
                                     Complex(0.0), Complex(3.0), Complex(2.0)});
  const NodeConfiguration conf = configuration_of(w);
  CHECK(conf.size() == 4);
  CHECK(conf.distinct(0) == Complex(3.0));
  CHECK(conf.distinct(1) == Complex(1.0));
  CHECK(conf.distinct(2) == Complex(2.0));
  CHECK(conf.distinct(3) == Complex(0.0));
  CHECK(conf.multiplicities == std::vector<Index>{2, 2, 2, 1});

  const NodeConfiguration single = configuration_of(make_cvector({Complex(5.0)}));
  CHECK(single.size() == 1);
  CHECK(single.multiplicities == std::vector<Index>{1});

  const NodeConfiguration triple =
      configuration_of(make_cvector({Complex(7.0), Complex(7.0), Complex(7.0)}));
  CHECK(triple.size() == 1);
  CHECK(triple.multiplicities == std::vector<Index>{3});
}

TEST_CASE("appending a repeat only increments its multiplicity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(uniform01(rng) * 4.0);
    NodeVector w(n);
    for (Index i = 0; i < n; ++i)
      w(i) = Complex(std::floor(uniform(rng, 0.0, 3.0)), 0.0);
    const NodeConfiguration before = configuration_of(w);
    const Index pick = static_cast<Index>(uniform01(rng) * static_cast<double>(n));
    NodeVector extended(n + 1);
    extended.head(n) = w;
    extended(n) = w(pick);
    const NodeConfiguration after = configuration_of(extended);
    CHECK(after.size() == before.size());
    Index changed = 0;
    for (Index j = 0; j < before.size(); ++j) {
      if (after.multiplicities[static_cast<std::size_t>(j)] !=
          before.multiplicities[static_cast<std::size_t>(j)])
        ++changed;
    }
    CHECK(changed == 1);
  }
}

TEST_CASE("signal distance") {
  std::mt19937_64 rng(41);
  const Signal f = random_signal(rng, {.max_support = 3, .max_multiplicity = 2});
  CHECK(signal_distance(f, f) == 0.0);

  // permuted support
  std::vector<Spike> reversed(f.support().rbegin(), f.support().rend());
  CHECK(signal_distance(f, Signal(std::move(reversed))) == 0.0);

  const Signal a({{Complex(0.0), make_cvector({Complex(1.0)})}});
  const Signal b({{Complex(0.1), make_cvector({Complex(1.0)})}});
  CHECK(signal_distance(a, b) == doctest::Approx(0.1));
  CHECK(signal_distance(b, a) == doctest::Approx(0.1));

  // structural mismatch costs the stray amplitude
  const Signal two({{Complex(0.0), make_cvector({Complex(1.0)})},
                    {Complex(5.0), make_cvector({Complex(0.25)})}});
  CHECK(signal_distance(a, two) == doctest::Approx(0.25));
}
