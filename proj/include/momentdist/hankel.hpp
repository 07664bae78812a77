#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/moments.hpp"

namespace momentdist {

/// (d+1) x (d+1) Hankel matrix with entry (i, j) = m_{i+j}.
class MomentMatrix {
 public:
  MomentMatrix() = default;

  /// Wraps an existing symmetric matrix (used for mixtures and
  /// regularised copies); the Hankel structure is not re-checked.
  explicit MomentMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {}

  std::size_t degree() const { return static_cast<std::size_t>(entries_.rows()) - 1; }
  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double min_eigenvalue() const;
  /// Smallest eigenvalue >= -rel_tol * ||M||_F.
  bool is_psd(double rel_tol = 1e-8) const;

 private:
  Eigen::MatrixXd entries_;
};

/// Throws InputError when the sequence has fewer than 2d + 1 moments.
MomentMatrix build_moment_matrix(const MomentSequence& ms, std::size_t degree);

template <class Real>
struct HankelRankResult {
  /// Number of leading determinants that are nonzero before the first zero.
  std::size_t rank = 0;
  /// det of the leading (j+1) x (j+1) block, j = 0..max_degree.
  std::vector<Real> determinants;
};

using HankelRank = HankelRankResult<double>;

/// Determinant by Gaussian elimination with partial pivoting; works for any
/// field-like Real.
template <class Real>
Real determinant(std::vector<std::vector<Real>> a) {
  using std::abs;
  const std::size_t n = a.size();
  Real det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0) return Real(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

/// Leading principal determinants of the degree-max_degree moment matrix and
/// the count of nonzero ones before the first zero, which is the number of
/// atoms of the underlying discrete measure.
///
/// det_j counts as zero when |det_j| <= zero_tol * max(1, m_2)^(j+1).
/// The problem is badly conditioned: measures with many atoms have tiny but
/// genuinely nonzero determinants, so use an extended-precision Real (and a
/// matching zero_tol) when resolving more than a handful of atoms.
template <class Real>
HankelRankResult<Real> hankel_rank(std::span<const Real> moments, std::size_t max_degree, Real zero_tol) {
  using std::abs;
  HankelRankResult<Real> out;
  Real scale = moments.size() > 2 ? moments[2] : Real(0);
  if (scale < 1) scale = 1;
  bool counting = true;
  Real threshold = zero_tol;
  for (std::size_t j = 0; j <= max_degree; ++j) {
    std::vector<std::vector<Real>> block(j + 1, std::vector<Real>(j + 1));
    for (std::size_t r = 0; r <= j; ++r) {
      for (std::size_t c = 0; c <= j; ++c) block[r][c] = moments[r + c];
    }
    out.determinants.push_back(determinant(std::move(block)));
    threshold *= scale;
    if (counting && abs(out.determinants.back()) > threshold) {
      ++out.rank;
    } else {
      counting = false;
    }
  }
  return out;
}

/// Double-precision rank of a moment sequence. Throws InputError unless the
/// sequence holds at least 2 * max_degree + 1 moments.
HankelRank hankel_rank(const MomentSequence& ms, std::size_t max_degree, double zero_tol = 1e-9);

struct WeightedMomentMatrix {
  const MomentMatrix* matrix;
  double weight;
};

/// Convex combination sum_i w_i M_i. Weights must be positive and sum to 1
/// within 1e-12; all matrices must share a degree. Throws InputError.
MomentMatrix mix(std::span<const WeightedMomentMatrix> parts);

}  // namespace momentdist
