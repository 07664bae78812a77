#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "momentdist/error.hpp"
#include "momentdist/io.hpp"

namespace momentdist {
namespace {

struct DataLine {
  std::size_t line;
  std::uint64_t a;
  std::uint64_t b;
};

std::string_view next_token(std::string_view& rest) {
  const auto begin = rest.find_first_not_of(" \t\r,");
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  const auto end = rest.find_first_of(" \t\r,");
  std::string_view token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a nonnegative integer vertex id, got '" + std::string(token) + "'");
  }
  if (value >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(line, "vertex id " + std::string(token) + " exceeds the supported range");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<DataLine> rows;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view rest(text);
    const auto first = rest.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (rest[first] == '#' || rest[first] == '%') continue;

    std::string_view a = next_token(rest);
    std::string_view b = next_token(rest);
    if (b.empty()) throw ParseError(line_no, "expected two vertex ids");
    rows.push_back({line_no, parse_id(a, line_no), parse_id(b, line_no)});
  }

  auto is_one_based = [&](std::size_t first_edge) {
    switch (options.indexing) {
      case Indexing::zero: return false;
      case Indexing::one: return true;
      case Indexing::automatic: break;
    }
    std::uint64_t min_id = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = first_edge; i < rows.size(); ++i) min_id = std::min({min_id, rows[i].a, rows[i].b});
    return rows.size() > first_edge && min_id == 1;
  };
  // Vertex count implied by the edges alone.
  auto implied_size = [&](std::size_t first_edge, bool one_based) -> std::size_t {
    if (rows.size() <= first_edge) return 0;
    std::uint64_t max_id = 0;
    for (std::size_t i = first_edge; i < rows.size(); ++i) max_id = std::max({max_id, rows[i].a, rows[i].b});
    return static_cast<std::size_t>(one_based ? max_id : max_id + 1);
  };

  bool has_header = false;
  if (!rows.empty()) {
    switch (options.header) {
      case HeaderMode::present: has_header = true; break;
      case HeaderMode::absent: has_header = false; break;
      case HeaderMode::automatic: {
        const auto& head = rows.front();
        has_header = head.a > 0 && rows.size() - 1 == head.b &&
                     implied_size(1, is_one_based(1)) <= head.a;
        break;
      }
    }
  }

  const std::size_t first_edge = has_header ? 1 : 0;
  const bool one_based = is_one_based(first_edge);
  std::vector<Edge> edges;
  edges.reserve(rows.size() - first_edge);
  for (std::size_t i = first_edge; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (one_based && (r.a == 0 || r.b == 0)) throw ParseError(r.line, "vertex id 0 in a 1-based edge list");
    if (r.a == r.b) throw RejectedEdgeError(r.line, "self-loop at vertex " + std::to_string(r.a));
    const std::uint64_t shift = one_based ? 1 : 0;
    edges.emplace_back(static_cast<Vertex>(r.a - shift), static_cast<Vertex>(r.b - shift));
  }

  std::size_t n = implied_size(first_edge, one_based);
  if (has_header) {
    const auto declared = static_cast<std::size_t>(rows.front().a);
    if (declared < n) {
      throw ParseError(rows.front().line, "header declares " + std::to_string(declared) +
                                              " vertices but ids need " + std::to_string(n));
    }
    n = declared;
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path.string() + "'");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace momentdist
