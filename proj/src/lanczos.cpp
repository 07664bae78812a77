#include "momentdist/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "momentdist/error.hpp"

namespace momentdist {
namespace {

// Orthogonalise v against the first m columns of basis (two passes), return its norm.
double orthogonalise(Eigen::VectorXd& v, const Eigen::MatrixXd& basis, Eigen::Index m) {
  for (int pass = 0; pass < 2; ++pass) {
    if (m == 0) break;
    const Eigen::VectorXd c = basis.leftCols(m).transpose() * v;
    v -= basis.leftCols(m) * c;
  }
  return v.norm();
}

}  // namespace

std::vector<double> lanczos_largest(std::size_t n, const LinearOperator& op, std::size_t k,
                                    const LanczosOptions& options) {
  if (n == 0 || k == 0) return {};
  k = std::min(k, n);
  const auto nn = static_cast<Eigen::Index>(n);
  const auto limit = static_cast<Eigen::Index>(std::min(n, options.max_iterations));

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  auto random_vector = [&] {
    Eigen::VectorXd v(nn);
    for (Eigen::Index i = 0; i < nn; ++i) v(i) = normal(rng);
    return v;
  };

  Eigen::MatrixXd basis(nn, std::min<Eigen::Index>(limit + 1, nn));
  std::vector<double> alpha, beta;  // beta[j] couples columns j and j+1
  Eigen::VectorXd v = random_vector();
  v /= v.norm();
  basis.col(0) = v;
  Eigen::VectorXd w(nn);

  Eigen::Index m = 0;
  Eigen::Index next_check = std::min<Eigen::Index>(limit, static_cast<Eigen::Index>(2 * k + 20));
  double last_residual = 0.0;
  while (true) {
    op(std::span<const double>(basis.col(m).data(), n), std::span<double>(w.data(), n));
    alpha.push_back(basis.col(m).dot(w));
    ++m;
    double b = orthogonalise(w, basis, m);
    const bool exhausted = m == nn;
    const double scale = std::max(1.0, std::abs(alpha.back()));
    if (!exhausted && b <= 1e-10 * scale) {
      // Invariant subspace found: restart from a direction outside it.
      double fresh = 0.0;
      while (fresh <= 1e-8) {
        w = random_vector();
        fresh = orthogonalise(w, basis, m);
      }
      w /= fresh;
      beta.push_back(0.0);
    } else {
      beta.push_back(b);
      if (!exhausted) w /= b;
    }

    if (m == next_check || exhausted || m == limit) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
      const double tail = exhausted ? 0.0 : beta.back();
      const auto found = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), m);
      bool converged = found == static_cast<Eigen::Index>(k);
      last_residual = 0.0;
      for (Eigen::Index i = 0; i < found; ++i) {
        const Eigen::Index col = m - 1 - i;
        const double theta = solver.eigenvalues()(col);
        const double residual = std::abs(tail * solver.eigenvectors()(m - 1, col));
        last_residual = std::max(last_residual, residual);
        if (residual > options.tol * std::max(1.0, std::abs(theta))) converged = false;
      }
      if (converged || exhausted) {
        std::vector<double> out;
        for (Eigen::Index i = 0; i < found; ++i) out.push_back(solver.eigenvalues()(m - 1 - i));
        return out;
      }
      if (m >= limit) {
        std::ostringstream msg;
        msg << "Lanczos did not converge after " << m << " iterations (largest residual " << last_residual << ")";
        throw ConvergenceError(static_cast<std::size_t>(m), last_residual, msg.str());
      }
      next_check = std::min(limit, m + static_cast<Eigen::Index>(k) + 10);
    }
    basis.col(m) = w;
  }
}

}  // namespace momentdist
