#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace momentdist {

struct LanczosOptions {
  /// Ritz pair i is accepted when |beta_m s_{m,i}| <= tol * max(1, |theta_i|).
  double tol = 1e-8;
  /// Largest Krylov dimension tried before giving up.
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 12345;
};

using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

/// k largest (algebraic) eigenvalues of a symmetric operator on R^n, in
/// descending order. Lanczos with full reorthogonalisation; the Krylov space
/// grows until the top k Ritz values converge. On breakdown the iteration
/// continues from a fresh random direction, so repeated eigenvalues of
/// disconnected graphs are found, but multiplicities inside one invariant
/// subspace are only resolved as far as rounding lets them appear. Returns
/// min(k, n) values. Throws ConvergenceError.
std::vector<double> lanczos_largest(std::size_t n, const LinearOperator& op, std::size_t k,
                                    const LanczosOptions& options = {});

}  // namespace momentdist
