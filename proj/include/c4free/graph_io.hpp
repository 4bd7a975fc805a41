#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

/// Malformed input; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "u v" lines ('#' comments and blank lines skipped). Vertex ids are
/// used as-is, so the graph has max-id + 1 vertices.
Graph load_edge_list(std::istream& in);

struct RemappedGraph {
  Graph graph;
  /// original_id[v] is the id vertex v carried in the input file.
  std::vector<std::uint64_t> original_id;
};

/// Like load_edge_list, but compacts the ids that occur in the file to
/// 0..k-1 (in increasing order of original id).
RemappedGraph load_edge_list_remapped(std::istream& in);

void save_edge_list(const Graph& g, std::ostream& out);

/// One "u v c" line per edge, u < v, lexicographic order.
void save_colouring(const EdgeColouring& colouring, std::ostream& out);

/// Inverse of save_colouring. Colour ids must already be contiguous.
EdgeColouring load_colouring(std::istream& in);

/// One "v c" line per vertex; uncoloured vertices are written as "v -".
void save_vertex_colouring(const VertexColouring& chi, std::ostream& out);

}  // namespace c4free
