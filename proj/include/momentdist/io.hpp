#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "momentdist/graph.hpp"

namespace momentdist {

enum class Indexing { zero, one, automatic };

enum class HeaderMode {
  automatic,  ///< first data line "n m" is a header iff it is consistent with the rest
  present,
  absent,
};

struct EdgeListOptions {
  Indexing indexing = Indexing::automatic;
  HeaderMode header = HeaderMode::automatic;
};

/// Reads a whitespace-separated edge list.
///
/// Format: one edge "u v" per line; tokens after the second are ignored
/// (weights, timestamps). Blank lines and lines whose first non-blank
/// character is '#' or '%' are skipped. An optional first data line "n m"
/// fixes the vertex count. With automatic header detection that line is
/// taken as a header only when exactly m data lines follow and n bounds all
/// vertex ids; otherwise it is an ordinary edge.
///
/// Automatic indexing treats ids as 1-based when no id 0 occurs and the
/// smallest id is 1. Without a header n is (largest 0-based id) + 1.
///
/// Throws ParseError (with line number) on malformed lines and
/// RejectedEdgeError on self-loops. Duplicate edges collapse.
Graph parse_edge_list(std::istream& in, const EdgeListOptions& options = {});

Graph read_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

/// Writes "n m" followed by one 0-based edge per line.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace momentdist
