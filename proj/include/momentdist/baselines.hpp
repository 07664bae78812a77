#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"
#include "momentdist/lanczos.hpp"

namespace momentdist {

struct FeatureVector {
  std::string method;
  std::vector<double> values;
};

double euclidean_distance(const FeatureVector& a, const FeatureVector& b);

// Cov

/// Columns x_i = A^i e / ||A^i e||, i = 1..k, e the unit all-ones vector.
/// With center set, each row of X is centred across its k entries; the
/// result is (1/n) X^T X. A column with A^i e = 0 stays zero. Throws
/// InputError for k < 2 or an empty graph.
Eigen::MatrixXd cov_descriptor(const Graph& g, std::size_t k, bool center = true);

/// Default Bhattacharyya jitter: 1e-8 * (tr c1 + tr c2) / (2k), or 1e-12
/// when both traces vanish.
double default_jitter(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2);

/// Bhattacharyya distance between N(0, c1 + jI) and N(0, c2 + jI):
/// (1/2) ln det(S) - (1/4) ln det(S1) - (1/4) ln det(S2) with S the mean.
/// Throws InputError on size mismatch and NumericError when a jittered
/// matrix is still not positive definite.
double bhattacharyya_dist(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2,
                          std::optional<double> jitter = std::nullopt);

// NCLM

/// [log(tr(A^i) / n^i)] for i = 2..7. Odd traces of triangle-free graphs
/// are zero; those entries use a count of one closed walk, log(1 / n^i),
/// so bipartite graphs still get finite features. Throws InputError on an
/// edgeless graph.
FeatureVector nclm_vector(const Graph& g);

// EIGS

struct EigsOptions {
  std::size_t dense_threshold = 2048;
  LanczosOptions lanczos{};
};

/// The k largest eigenvalues in descending algebraic order, zero-padded to
/// length k when n < k.
FeatureVector top_k_eigenvalues(const Graph& g, std::size_t k = 10, const EigsOptions& options = {});

// Graphlets

struct Graphlet3Counts {
  std::uint64_t empty = 0;
  std::uint64_t one_edge = 0;
  std::uint64_t wedge = 0;
  std::uint64_t triangle = 0;
};

/// Exact induced 3-vertex subgraph counts from triangle and degree counts.
Graphlet3Counts graphlet3_counts(const Graph& g);

/// Counts divided by C(n, 3): (empty, one-edge, wedge, triangle). Throws
/// InputError when n < 3.
FeatureVector graphlet3_distribution(const Graph& g);

/// Index into four_vertex_graph_names() of the graph induced on vertices
/// {a, b, c, d} (distinct).
std::size_t classify_graphlet4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

/// Fractions of `samples` uniformly drawn 4-subsets falling in each of the 11
/// types, in four_vertex_graph_names() order. Throws InputError when n < 4
/// or samples == 0.
FeatureVector graphlet4_distribution(const Graph& g, std::size_t samples = 10000, std::uint64_t seed = 0);

// Wicker

struct WickerOptions {
  /// Eigenvector overlaps |<u_i, v_j>| at or below this contribute nothing.
  double overlap_tol = 1e-12;
  std::size_t dense_threshold = 4096;
};

/// sum_{i,j} (l_i - m_j)^2 / (l_i + m_j) |<u_i, v_j>|^k over full
/// eigendecompositions of both adjacency matrices. Terms with l_i = m_j = 0
/// are zero. Throws InputError when the vertex counts differ and
/// NumericError when l_i + m_j = 0 with l_i != m_j and a nonzero overlap.
/// For k != 2 the value depends on the eigenvector basis chosen inside
/// repeated eigenspaces.
double wicker_distance(const Graph& g1, const Graph& g2, double k = 2.0, const WickerOptions& options = {});

}  // namespace momentdist
