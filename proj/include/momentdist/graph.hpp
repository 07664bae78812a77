#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace momentdist {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph in compressed sparse row form.
///
/// Every Graph is canonical: neighbor lists are strictly increasing, the
/// structure is symmetric and there are no self-loops. Two graphs with the
/// same labelled edge set therefore compare equal with operator==.
/// Instances are immutable and safe to share between threads.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;

  /// Builds a graph on n vertices. Duplicate edges (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw InputError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph edgeless(std::size_t n);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  std::vector<std::size_t> degrees() const;
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const Vertex> column_indices() const noexcept { return targets_; }

  /// Each undirected edge once as (u, v) with u < v, lexicographically.
  std::vector<Edge> edges() const;

  Graph complement() const;

  /// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  /// y = A x for the 0/1 adjacency matrix A. Rows are split across
  /// `threads` workers; each row is summed sequentially, so the result does
  /// not depend on the thread count.
  void multiply(std::span<const double> x, std::span<double> y, unsigned threads = 1) const;

  /// Checks the canonical-form invariants; always true for graphs built
  /// through the public API.
  bool is_canonical() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> targets)
      : offsets_(std::move(offsets)), targets_(std::move(targets)) {}

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  /// Throws InputError unless `map` is a bijection.
  explicit Permutation(std::vector<Vertex> map);

  static Permutation identity(std::size_t n);
  static Permutation reversal(std::size_t n);
  static Permutation random(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const noexcept { return map_.size(); }
  Vertex operator()(Vertex v) const { return map_[v]; }
  std::span<const Vertex> map() const noexcept { return map_; }
  Permutation inverse() const;

 private:
  std::vector<Vertex> map_;
};

/// Direct sum; graph i's vertices are shifted by the sizes of graphs 0..i-1.
/// Throws InputError on an empty list.
Graph disjoint_union(std::span<const Graph> graphs);

/// Relabels vertex v as p(v). Throws InputError on a size mismatch.
Graph permute(const Graph& g, const Permutation& p);

/// Sorted (ascending) degree sequence.
std::vector<std::size_t> degree_multiset(const Graph& g);

std::size_t count_components(const Graph& g);

/// Longest shortest path, or nullopt when the graph is disconnected.
/// Graphs with at most one vertex have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

/// Number of walks of length k from i to j by explicit enumeration of
/// walks. Exponential in k; meant as an independent check on matrix powers.
std::uint64_t walk_count(const Graph& g, Vertex i, Vertex j, std::size_t k);

Eigen::MatrixXd to_dense(const Graph& g);

}  // namespace momentdist
