#include "prony/signal.hpp"

#include <algorithm>
#include <stdexcept>

#include "prony/detail/factorials.hpp"

namespace prony {

namespace {

// Drops trailing exact zeros; an all-zero spike comes back empty.
CVector trim_amplitudes(CVector a) {
  Index n = a.size();
  while (n > 0 && a(n - 1) == Complex(0.0)) --n;
  return a.head(n).eval();
}

}  // namespace

Signal::Signal(std::vector<Spike> support, double merge_tol) {
  for (Spike& s : support) {
    auto it = std::find_if(support_.begin(), support_.end(), [&](const Spike& existing) {
      return std::abs(existing.node - s.node) <= merge_tol;
    });
    if (it == support_.end()) {
      support_.push_back(std::move(s));
    } else {
      const Index n = std::max(it->amplitudes.size(), s.amplitudes.size());
      CVector sum = CVector::Zero(n);
      sum.head(it->amplitudes.size()) = it->amplitudes;
      sum.head(s.amplitudes.size()) += s.amplitudes;
      it->amplitudes = std::move(sum);
    }
  }
  for (Spike& s : support_) s.amplitudes = trim_amplitudes(std::move(s.amplitudes));
  std::erase_if(support_, [](const Spike& s) { return s.amplitudes.size() == 0; });
}

Index Signal::rank() const {
  Index r = 0;
  for (const Spike& s : support_) r += s.amplitudes.size();
  return r;
}

CVector Signal::nodes() const {
  CVector x(support_size());
  for (Index j = 0; j < support_size(); ++j) x(j) = support_[j].node;
  return x;
}

std::vector<Index> Signal::multiplicities() const {
  std::vector<Index> d(support_.size());
  for (std::size_t j = 0; j < support_.size(); ++j) d[j] = support_[j].amplitudes.size();
  return d;
}

MomentVector moments(const Signal& f, Index count) {
  if (count < 1) throw std::invalid_argument("moments: count must be >= 1");
  MomentVector m = MomentVector::Zero(count);
  for (const Spike& s : f.support()) {
    // powers(p) = x^p with the convention 0^0 = 1.
    CVector powers(count);
    powers(0) = Complex(1.0);
    for (Index p = 1; p < count; ++p) powers(p) = powers(p - 1) * s.node;
    for (Index k = 0; k < count; ++k) {
      const Index lmax = std::min<Index>(k, s.amplitudes.size() - 1);
      for (Index l = 0; l <= lmax; ++l)
        m(k) += detail::falling_factorial(k, l) * s.amplitudes(l) * powers(k - l);
    }
  }
  return m;
}

NodeConfiguration configuration_of(const NodeVector& w, double tol) {
  if (w.size() == 0) throw std::invalid_argument("configuration_of: empty node vector");
  NodeConfiguration conf;
  std::vector<Complex> distinct;
  for (Index i = 0; i < w.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (std::abs(w(i) - distinct[j]) <= tol) {
        ++conf.multiplicities[j];
        found = true;
        break;
      }
    }
    if (!found) {
      distinct.push_back(w(i));
      conf.multiplicities.push_back(1);
    }
  }
  conf.distinct = Eigen::Map<const CVector>(distinct.data(), static_cast<Index>(distinct.size()));
  return conf;
}

namespace {

double spike_cost(const Spike& a, const Spike& b) {
  double cost = std::abs(a.node - b.node);
  const Index n = std::max(a.amplitudes.size(), b.amplitudes.size());
  for (Index i = 0; i < n; ++i) {
    const Complex av = i < a.amplitudes.size() ? a.amplitudes(i) : Complex(0.0);
    const Complex bv = i < b.amplitudes.size() ? b.amplitudes(i) : Complex(0.0);
    cost = std::max(cost, std::abs(av - bv));
  }
  return cost;
}

double unmatched_cost(const Spike& s) {
  return s.amplitudes.size() == 0 ? 0.0 : s.amplitudes.cwiseAbs().maxCoeff();
}

}  // namespace

double signal_distance(const Signal& a, const Signal& b) {
  const auto& small = a.support_size() <= b.support_size() ? a.support() : b.support();
  const auto& large = a.support_size() <= b.support_size() ? b.support() : a.support();
  const std::size_t ns = small.size();
  const std::size_t nl = large.size();
  if (nl > 16)
    throw std::invalid_argument("signal_distance: supports larger than 16 are unsupported");
  if (ns == 0) {
    double cost = 0.0;
    for (const Spike& s : large) cost = std::max(cost, unmatched_cost(s));
    return cost;
  }
  // Bottleneck assignment over all injections small -> large, by bitmask DP.
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dp(ns + 1, std::vector<double>(1u << nl, kInf));
  for (std::size_t mask = 0; mask < (1u << nl); ++mask) {
    double rest = 0.0;
    for (std::size_t j = 0; j < nl; ++j)
      if (!(mask & (1u << j))) rest = std::max(rest, unmatched_cost(large[j]));
    dp[ns][mask] = rest;
  }
  for (std::size_t i = ns; i-- > 0;) {
    for (std::size_t mask = 0; mask < (1u << nl); ++mask) {
      for (std::size_t j = 0; j < nl; ++j) {
        if (mask & (1u << j)) continue;
        const double via =
            std::max(spike_cost(small[i], large[j]), dp[i + 1][mask | (1u << j)]);
        dp[i][mask] = std::min(dp[i][mask], via);
      }
    }
  }
  return dp[0][0];
}

Signal operator+(const Signal& a, const Signal& b) {
  std::vector<Spike> support = a.support();
  support.insert(support.end(), b.support().begin(), b.support().end());
  return Signal(std::move(support));
}

Signal operator*(Complex scale, const Signal& f) {
  std::vector<Spike> support = f.support();
  for (Spike& s : support) s.amplitudes *= scale;
  return Signal(std::move(support));
}

}  // namespace prony
