#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "momentdist/graph.hpp"

namespace momentdist {

/// Ring lattice with endpoint rewiring.
///
/// Starts from the ring on nv vertices where each vertex links to its
/// c = ne / nv nearest neighbours on each side. Lattice edges are then
/// visited in order of ring offset (1..c) and vertex; with probability rho
/// the far endpoint is replaced by a uniformly drawn vertex, redrawing on
/// self-loops and existing edges. The result has exactly nv vertices and ne
/// edges and depends only on the arguments.
///
/// Throws InputError unless ne is a positive multiple of nv with
/// 2 * (ne / nv) < nv, and rho lies in [0, 1].
Graph generate_rewired(std::size_t nv, std::size_t ne, double rho, std::uint64_t seed);

/// Uniform random graph with exactly ne edges on nv vertices (rejection
/// sampling of vertex pairs). Throws InputError when ne exceeds the number
/// of pairs.
Graph generate_gnm(std::size_t nv, std::size_t ne, std::uint64_t seed);

/// Breadth-first snowball sample: BFS from a uniformly drawn start vertex,
/// visiting neighbours in increasing id order, stopping once target_n
/// vertices are collected. If the start component is exhausted first, BFS
/// resumes from another uniformly drawn unvisited vertex. Returns the
/// induced subgraph with vertices numbered in visit order.
Graph sample_subgraph(const Graph& g, std::size_t target_n, std::uint64_t seed);

/// Catalogue of standard small graphs.
///
/// Families (params in parentheses): complete K(n), star S(n) = K_{1,n-1},
/// cycle C(n), path P(n), empty E(n), complete bipartite KB(m, n).
/// Fixed four-vertex graphs: 4K1, K4, co-diamond, diamond, co-paw, paw,
/// 2K2, C4, claw, co-claw, P4. The co-X graphs are complements of X.
/// Throws InputError for unknown names or wrong parameter counts.
Graph named_graph(std::string_view name, std::span<const std::size_t> params = {});

/// Parses compact names: "K4", "S5", "C10", "P3", "E4", "K2,3", the fixed
/// four-vertex names, and unions joined with 'u' such as "C4uK1".
Graph graph_from_name(std::string_view spec);

/// The eleven non-isomorphic four-vertex graphs in catalogue order.
const std::vector<std::string>& four_vertex_graph_names();

}  // namespace momentdist
