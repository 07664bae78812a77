#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"

namespace momentdist {

enum class StateKind {
  uniform_vector,  ///< vector state with the normalised all-ones vector
  trace,           ///< normalised trace
  custom_vector,   ///< vector state with a caller-supplied unit vector
  density,         ///< density matrix pI + qJ
};

std::string_view to_string(StateKind kind);

/// Moments m_0..m_K of an adjacency (or symmetric) matrix in some state.
struct MomentSequence {
  StateKind state = StateKind::uniform_vector;
  std::vector<double> values;

  std::size_t max_order() const { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t k) const { return values[k]; }
};

/// Density matrix pI + qJ; a state on n x n matrices when
/// n (p + q) = 1, p >= 0 and p + q n >= 0.
struct DensityParams {
  double p = 0.0;
  double q = 0.0;

  /// Throws InputError if (p, q) is not a state for size n.
  void validate(std::size_t n, double tol = 1e-12) const;

  static DensityParams trace_state(std::size_t n) { return {1.0 / static_cast<double>(n), 0.0}; }
  static DensityParams uniform_vector_state(std::size_t n) { return {0.0, 1.0 / static_cast<double>(n)}; }
};

/// m_k = (1/n) 1^T A^k 1, from K sparse products w <- A w started at the
/// all-ones vector. O(K |E|) time, O(|V|) extra space. Throws InputError on
/// an empty graph.
MomentSequence vector_state_moments(const Graph& g, std::size_t max_order, unsigned threads = 1);

struct TraceOptions {
  /// Dense eigendecomposition up to this many vertices; above it each
  /// diagonal entry of A^k is extracted with its own product chain, which
  /// costs O(n K |E|).
  std::size_t dense_threshold = 2048;
  unsigned threads = 1;
};

/// m_k = tr(A^k) / n. Since tr(A^k) is an integer (the number of closed
/// walks of length k), values below 2^53 are rounded to it before dividing.
MomentSequence trace_moments(const Graph& g, std::size_t max_order, const TraceOptions& options = {});

/// m_k = xi^T A^k xi for a dense symmetric A and unit vector xi. Throws
/// InputError when A is not symmetric or xi is not a unit vector (both to
/// within 1e-10).
MomentSequence xi_state_moments(const Eigen::MatrixXd& a, const Eigen::VectorXd& xi, std::size_t max_order);

/// m_k = tr((pI + qJ) A^k) = p tr(A^k) + q 1^T A^k 1.
MomentSequence density_state_moments(const Graph& g, const DensityParams& params, std::size_t max_order,
                                     const TraceOptions& options = {});

/// Moments up to the order a degree-d moment matrix needs.
constexpr std::size_t order_for_degree(std::size_t degree) { return 2 * degree; }

/// xi^T A^k xi for k = 0..max_order in arbitrary floating point type Real
/// (for example a boost::multiprecision type). Entries of A and xi are
/// converted exactly; no symmetry or norm checks are made.
template <class Real>
std::vector<Real> xi_moments_as(const Eigen::MatrixXd& a, std::span<const double> xi, std::size_t max_order) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<Real> x(xi.begin(), xi.end());
  std::vector<Real> w = x;
  std::vector<Real> next(n);
  std::vector<Real> out;
  out.reserve(max_order + 1);
  for (std::size_t k = 0;; ++k) {
    Real dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * w[i];
    out.push_back(dot);
    if (k == max_order) break;
    for (std::size_t i = 0; i < n; ++i) {
      Real sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const double entry = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (entry != 0.0) sum += Real(entry) * w[j];
      }
      next[i] = sum;
    }
    w.swap(next);
  }
  return out;
}

}  // namespace momentdist
