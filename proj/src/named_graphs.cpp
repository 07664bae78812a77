#include <cctype>
#include <charconv>
#include <map>
#include <string>

#include "momentdist/error.hpp"
#include "momentdist/generators.hpp"

namespace momentdist {
namespace {

Graph complete(std::size_t n) { return Graph::edgeless(n).complement(); }

Graph star(std::size_t n) {
  if (n == 0) throw InputError("star needs at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  return Graph::from_edges(n, edges);
}

Graph bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(a + v));
  }
  return Graph::from_edges(a + b, edges);
}

Graph four(std::initializer_list<Edge> edges) {
  return Graph::from_edges(4, std::vector<Edge>(edges));
}

const std::map<std::string, Graph, std::less<>>& fixed_graphs() {
  static const auto table = [] {
    std::map<std::string, Graph, std::less<>> t;
    t["4K1"] = Graph::edgeless(4);
    t["K4"] = complete(4);
    t["diamond"] = four({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    t["co-diamond"] = t["diamond"].complement();
    t["paw"] = four({{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    t["co-paw"] = t["paw"].complement();
    t["claw"] = four({{0, 1}, {0, 2}, {0, 3}});
    t["co-claw"] = t["claw"].complement();
    t["2K2"] = four({{0, 1}, {2, 3}});
    t["C4"] = t["2K2"].complement();
    t["P4"] = four({{0, 1}, {1, 2}, {2, 3}});
    return t;
  }();
  return table;
}

void expect_params(std::string_view name, std::span<const std::size_t> params, std::size_t count) {
  if (params.size() != count) {
    throw InputError("graph family '" + std::string(name) + "' takes " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

const std::vector<std::string>& four_vertex_graph_names() {
  static const std::vector<std::string> names = {"4K1", "K4",  "co-diamond", "diamond", "co-paw", "paw",
                                                 "2K2", "C4", "claw",       "co-claw", "P4"};
  return names;
}

Graph named_graph(std::string_view name, std::span<const std::size_t> params) {
  const auto& fixed = fixed_graphs();
  if (auto it = fixed.find(name); it != fixed.end() && params.empty()) return it->second;

  if (name == "K" || name == "complete") {
    expect_params(name, params, 1);
    return complete(params[0]);
  }
  if (name == "S" || name == "star") {
    expect_params(name, params, 1);
    return star(params[0]);
  }
  if (name == "C" || name == "cycle") {
    expect_params(name, params, 1);
    return cycle(params[0]);
  }
  if (name == "P" || name == "path") {
    expect_params(name, params, 1);
    return path(params[0]);
  }
  if (name == "E" || name == "empty") {
    expect_params(name, params, 1);
    return Graph::edgeless(params[0]);
  }
  if (name == "KB" || name == "bipartite") {
    expect_params(name, params, 2);
    return bipartite(params[0], params[1]);
  }
  throw InputError("unknown graph name '" + std::string(name) + "'");
}

Graph graph_from_name(std::string_view spec) {
  if (spec.empty()) throw InputError("empty graph name");
  if (auto split = spec.find('u'); split != std::string_view::npos) {
    std::vector<Graph> parts;
    while (true) {
      split = spec.find('u');
      parts.push_back(graph_from_name(spec.substr(0, split)));
      if (split == std::string_view::npos) break;
      spec.remove_prefix(split + 1);
    }
    return disjoint_union(parts);
  }

  if (fixed_graphs().contains(spec)) return named_graph(spec);

  std::size_t letters = 0;
  while (letters < spec.size() && std::isalpha(static_cast<unsigned char>(spec[letters]))) ++letters;
  const std::string_view family = spec.substr(0, letters);
  std::vector<std::size_t> params;
  std::string_view rest = spec.substr(letters);
  while (!rest.empty()) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc()) throw InputError("cannot parse graph name '" + std::string(spec) + "'");
    params.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.front() != ',') throw InputError("cannot parse graph name '" + std::string(spec) + "'");
      rest.remove_prefix(1);
    }
  }
  if (family == "K" && params.size() == 2) return named_graph("KB", params);
  return named_graph(family, params);
}

}  // namespace momentdist
