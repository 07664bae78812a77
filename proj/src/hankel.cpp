#include "momentdist/hankel.hpp"

#include <string>

#include "momentdist/error.hpp"

namespace momentdist {

double MomentMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool MomentMatrix::is_psd(double rel_tol) const {
  return min_eigenvalue() >= -rel_tol * entries_.norm();
}

MomentMatrix build_moment_matrix(const MomentSequence& ms, std::size_t degree) {
  if (ms.values.size() < 2 * degree + 1) {
    throw InputError("degree-" + std::to_string(degree) + " moment matrix needs moments up to order " +
                     std::to_string(2 * degree) + ", have " + std::to_string(ms.max_order()));
  }
  const auto size = static_cast<Eigen::Index>(degree + 1);
  Eigen::MatrixXd m(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) m(i, j) = ms.values[static_cast<std::size_t>(i + j)];
  }
  return MomentMatrix(std::move(m));
}

HankelRank hankel_rank(const MomentSequence& ms, std::size_t max_degree, double zero_tol) {
  if (ms.values.size() < 2 * max_degree + 1) {
    throw InputError("hankel_rank: need moments up to order " + std::to_string(2 * max_degree));
  }
  return hankel_rank<double>(std::span<const double>(ms.values), max_degree, zero_tol);
}

MomentMatrix mix(std::span<const WeightedMomentMatrix> parts) {
  if (parts.empty()) throw InputError("mix of an empty list");
  const std::size_t size = parts.front().matrix->size();
  double total = 0.0;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (const auto& [matrix, weight] : parts) {
    if (matrix->size() != size) throw InputError("mix: moment matrices have different degrees");
    if (!(weight > 0.0)) throw InputError("mix: weights must be positive");
    total += weight;
    sum += weight * matrix->entries();
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("mix: weights must sum to 1");
  return MomentMatrix(std::move(sum));
}

}  // namespace momentdist
