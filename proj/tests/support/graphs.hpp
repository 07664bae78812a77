#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"

namespace testing {

using momentdist::Edge;
using momentdist::Graph;
using momentdist::Vertex;

// G(n, p)
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gnp(n, p, rng);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

// Cayley graph on Z4 x Z4 with generators +-(0,1), +-(1,0), +-(1,1).
inline Graph shrikhande() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      const int steps[3][2] = {{0, 1}, {1, 0}, {1, 1}};
      for (const auto& s : steps) {
        edges.emplace_back(4 * a + b, 4 * ((a + s[0]) % 4) + (b + s[1]) % 4);
      }
    }
  }
  return Graph::from_edges(16, edges);
}

// K4 x K4: same row or same column of a 4 x 4 board.
inline Graph rook4x4() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      if (u / 4 == v / 4 || u % 4 == v % 4) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(16, edges);
}

// (1/n) 1^T A^k 1 by dense powers.
inline std::vector<double> dense_vector_moments(const Graph& g, std::size_t kmax) {
  const Eigen::MatrixXd a = momentdist::to_dense(g);
  const auto n = a.rows();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    out.push_back(p.sum() / double(n));
    p = p * a;
  }
  return out;
}

inline std::vector<double> dense_trace_moments(const Graph& g, std::size_t kmax) {
  const Eigen::MatrixXd a = momentdist::to_dense(g);
  const auto n = a.rows();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    out.push_back(p.trace() / double(n));
    p = p * a;
  }
  return out;
}

inline double relative_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace testing
