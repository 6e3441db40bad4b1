#pragma once

#include <vector>

#include "prony/types.hpp"

namespace prony {

/// Nodes closer than this are treated as one node and merged at construction.
inline constexpr double kNodeMergeTol = 1e-12;

/// One support point: node x and the amplitudes a_0..a_{d-1} of the delta
/// derivatives attached to it.
struct Spike {
  Complex node;
  CVector amplitudes;
};

/// A finite linear combination of shifted delta functions and their
/// derivatives. Invariants kept by the constructor:
///   - nodes are pairwise distinct (closer than merge_tol are merged by
///     amplitude addition),
///   - each spike's top amplitude is nonzero (trailing exact zeros trimmed;
///     spikes with no amplitudes left are dropped),
///   - support order is the order of first appearance.
class Signal {
 public:
  Signal() = default;  // zero signal
  explicit Signal(std::vector<Spike> support, double merge_tol = kNodeMergeTol);

  const std::vector<Spike>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  /// Number of distinct nodes s.
  Index support_size() const { return static_cast<Index>(support_.size()); }
  /// Sum of multiplicities.
  Index rank() const;
  CVector nodes() const;
  std::vector<Index> multiplicities() const;

 private:
  std::vector<Spike> support_;
};

/// Power moments m_k = sum_j sum_l (k!/(k-l)!) a_{j,l} x_j^{k-l}, k < count.
MomentVector moments(const Signal& f, Index count);

/// Distinct values of a node vector with their multiplicities (order of
/// first appearance).
struct NodeConfiguration {
  CVector distinct;                   // T(w)
  std::vector<Index> multiplicities;  // D(w)

  Index size() const { return distinct.size(); }  // s(w)
};

/// Coordinates within `tol` of an earlier one are counted as repeats of it;
/// tol = 0 means exact equality.
NodeConfiguration configuration_of(const NodeVector& w, double tol = 0.0);

/// Permutation-minimizing bottleneck distance. Matched spikes cost the larger
/// of the node distance and the max amplitude difference (shorter amplitude
/// vectors are zero-padded); unmatched spikes cost their largest amplitude
/// modulus. Zero iff the signals are equal up to support permutation.
double signal_distance(const Signal& a, const Signal& b);

/// Sum of signals; supports are merged.
Signal operator+(const Signal& a, const Signal& b);
Signal operator*(Complex scale, const Signal& f);

}  // namespace prony
