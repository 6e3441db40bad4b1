#include "prony/hankel.hpp"

#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace prony {

CMatrix build_hankel(const MomentVector& mu, Index d) {
  if (d < 1) throw std::invalid_argument("build_hankel: d must be >= 1");
  if (mu.size() != 2 * d)
    throw std::invalid_argument("build_hankel: moment vector must have length 2d");
  CMatrix h(d, d + 1);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j <= d; ++j) h(i, j) = mu(i + j);
  return h;
}

CMatrix hankel_square(const MomentVector& mu, Index e) {
  if (e < 1) throw std::invalid_argument("hankel_square: e must be >= 1");
  if (mu.size() < 2 * e - 1)
    throw std::invalid_argument("hankel_square: moment vector too short");
  CMatrix m(e, e);
  for (Index i = 0; i < e; ++i)
    for (Index j = 0; j < e; ++j) m(i, j) = mu(i + j);
  return m;
}

Index numeric_rank(const CMatrix& h, double tol) {
  if (!(tol > 0.0 && tol < 1.0))
    throw std::invalid_argument("numeric_rank: tol must lie in (0,1)");
  Eigen::JacobiSVD<CMatrix> svd(h);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol * sigma(0)) ++r;
  return r;
}

std::string to_string(Stratum s) {
  return s == Stratum::Solvable ? "solvable" : "unsolvable";
}

SolvabilityReport classify(const MomentVector& mu, Index d, double tol) {
  const CMatrix h = build_hankel(mu, d);
  SolvabilityReport report;
  report.tolerance = tol;
  report.rank = numeric_rank(h, tol);
  if (report.rank == 0) return report;  // zero moments: solvable, empty signal

  const CMatrix m = hankel_square(mu, report.rank);
  report.leading_minor = std::abs(Eigen::PartialPivLU<CMatrix>(m).determinant());
  report.stratum = numeric_rank(m, tol) == report.rank ? Stratum::Solvable
                                                       : Stratum::Unsolvable;
  return report;
}

}  // namespace prony
