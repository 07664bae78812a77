#include "momentdist/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "momentdist/error.hpp"
#include "momentdist/parallel.hpp"

namespace momentdist {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
  std::vector<Vertex> targets(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    targets[cursor[u]++] = v;
    targets[cursor[v]++] = u;
  }

  // Sort and deduplicate each row, then compact.
  std::vector<std::size_t> compact(n + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) targets[out++] = *it;
    compact[v + 1] = out;
  }
  targets.resize(out);
  targets.shrink_to_fit();
  return Graph(std::move(compact), std::move(targets));
}

Graph Graph::edgeless(std::size_t n) {
  return Graph(std::vector<std::size_t>(n + 1, 0), {});
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = degree(static_cast<Vertex>(v));
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  const std::size_t n = num_vertices();
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n; ++u) {
    auto row = neighbors(static_cast<Vertex>(u));
    auto it = std::upper_bound(row.begin(), row.end(), static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      if (it != row.end() && *it == v) {
        ++it;
        continue;
      }
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return from_edges(n, out);
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(num_vertices(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v >= num_vertices()) throw InputError("induced_subgraph: vertex out of range");
    if (relabel[v] != kAbsent) throw InputError("induced_subgraph: repeated vertex");
    relabel[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      if (relabel[w] != kAbsent && i < relabel[w]) out.emplace_back(static_cast<Vertex>(i), relabel[w]);
    }
  }
  return from_edges(vertices.size(), out);
}

void Graph::multiply(std::span<const double> x, std::span<double> y, unsigned threads) const {
  const std::size_t n = num_vertices();
  if (x.size() != n || y.size() != n) throw InputError("multiply: vector size does not match graph");

  auto rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double sum = 0.0;
      for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) sum += x[targets_[k]];
      y[i] = sum;
    }
  };

  constexpr std::size_t kRowBlock = 2048;
  const std::size_t blocks = (n + kRowBlock - 1) / kRowBlock;
  if (threads <= 1 || blocks <= 1) {
    rows(0, n);
    return;
  }
  parallel_for(blocks, threads, [&](std::size_t b) {
    rows(b * kRowBlock, std::min(n, (b + 1) * kRowBlock));
  });
}

bool Graph::is_canonical() const {
  const std::size_t n = num_vertices();
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != targets_.size()) return false;
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    auto row = neighbors(static_cast<Vertex>(u));
    degree_sum += row.size();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= n || row[k] == u) return false;
      if (k > 0 && row[k - 1] >= row[k]) return false;
      if (!has_edge(row[k], static_cast<Vertex>(u))) return false;
    }
  }
  return degree_sum == 2 * num_edges() && targets_.size() % 2 == 0;
}

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (Vertex v : map_) {
    if (v >= map_.size() || seen[v]) throw InputError("permutation is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  return Permutation(std::move(map));
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<Vertex> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Vertex>(n - 1 - i);
  return Permutation(std::move(map));
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Vertex>(i);
  return Permutation(std::move(inv));
}

Graph disjoint_union(std::span<const Graph> graphs) {
  if (graphs.empty()) throw InputError("disjoint_union of an empty list");
  std::size_t total = 0;
  std::vector<Edge> edges;
  for (const Graph& g : graphs) {
    for (const auto& [u, v] : g.edges()) {
      edges.emplace_back(static_cast<Vertex>(u + total), static_cast<Vertex>(v + total));
    }
    total += g.num_vertices();
  }
  return Graph::from_edges(total, edges);
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) {
    throw InputError("permutation of size " + std::to_string(p.size()) + " applied to graph with " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = p(u);
    v = p(v);
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

// BFS distances from source; returns the number of vertices reached.
std::size_t bfs(const Graph& g, Vertex source, std::vector<std::size_t>& dist) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
        ++reached;
      }
    }
  }
  return reached;
}

}  // namespace

std::size_t count_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> dist(n);
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    bfs(g, static_cast<Vertex>(s), dist);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != kUnreached) seen[v] = true;
    }
  }
  return components;
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> dist(n);
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (bfs(g, static_cast<Vertex>(s), dist) != n) return std::nullopt;
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

namespace {

std::uint64_t count_walks_from(const Graph& g, Vertex at, Vertex target, std::size_t remaining) {
  if (remaining == 0) return at == target ? 1 : 0;
  std::uint64_t total = 0;
  for (Vertex next : g.neighbors(at)) total += count_walks_from(g, next, target, remaining - 1);
  return total;
}

}  // namespace

std::uint64_t walk_count(const Graph& g, Vertex i, Vertex j, std::size_t k) {
  if (i >= g.num_vertices() || j >= g.num_vertices()) throw InputError("walk_count: vertex out of range");
  return count_walks_from(g, i, j, k);
}

Eigen::MatrixXd to_dense(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) a(u, v) = 1.0;
  }
  return a;
}

}  // namespace momentdist
