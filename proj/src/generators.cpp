#include <algorithm>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>

#include "momentdist/error.hpp"
#include "momentdist/generators.hpp"

namespace momentdist {
namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph generate_rewired(std::size_t nv, std::size_t ne, double rho, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InputError("rewiring probability must lie in [0, 1]");
  if (nv == 0 || ne == 0 || ne % nv != 0) {
    throw InputError("ring lattice needs ne to be a positive multiple of nv (got nv=" + std::to_string(nv) +
                     ", ne=" + std::to_string(ne) + ")");
  }
  const std::size_t c = ne / nv;
  if (2 * c >= nv) {
    throw InputError("ring lattice with " + std::to_string(c) + " neighbours per side needs more than " +
                     std::to_string(2 * c) + " vertices");
  }

  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * ne);
  std::vector<std::size_t> degree(nv, 2 * c);
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t j = 1; j <= c; ++j) {
      present.insert(edge_key(static_cast<Vertex>(u), static_cast<Vertex>((u + j) % nv)));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
  for (std::size_t j = 1; j <= c; ++j) {
    for (std::size_t u = 0; u < nv; ++u) {
      if (coin(rng) >= rho) continue;
      const auto a = static_cast<Vertex>(u);
      const auto b = static_cast<Vertex>((u + j) % nv);
      if (degree[a] >= nv - 1) continue;  // no admissible target
      Vertex w = 0;
      do {
        w = static_cast<Vertex>(pick(rng));
      } while (w == a || present.contains(edge_key(a, w)));
      present.erase(edge_key(a, b));
      present.insert(edge_key(a, w));
      --degree[b];
      ++degree[w];
    }
  }

  std::vector<Edge> edges;
  edges.reserve(present.size());
  for (std::uint64_t key : present) {
    edges.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
  }
  return Graph::from_edges(nv, edges);
}

Graph sample_subgraph(const Graph& g, std::size_t target_n, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (target_n == 0 || target_n > n) {
    throw InputError("sample size " + std::to_string(target_n) + " outside [1, " + std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(target_n);
  std::queue<Vertex> frontier;

  auto visit = [&](Vertex v) {
    visited[v] = true;
    order.push_back(v);
    frontier.push(v);
  };

  while (order.size() < target_n) {
    if (frontier.empty()) {
      Vertex start = 0;
      do {
        start = static_cast<Vertex>(pick(rng));
      } while (visited[start]);
      visit(start);
      continue;
    }
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (order.size() == target_n) break;
      if (!visited[w]) visit(w);
    }
  }
  return g.induced_subgraph(order);
}

Graph generate_gnm(std::size_t nv, std::size_t ne, std::uint64_t seed) {
  const std::size_t max_edges = nv < 2 ? 0 : nv * (nv - 1) / 2;
  if (ne > max_edges) throw InputError("G(n, m): more edges requested than vertex pairs");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(nv == 0 ? 0 : nv - 1));
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(ne);
  while (edges.size() < ne) {
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert(edge_key(a, b)).second) edges.emplace_back(a, b);
  }
  return Graph::from_edges(nv, edges);
}

}  // namespace momentdist
