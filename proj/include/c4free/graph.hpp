#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace c4free {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Colour kNoColour = ~Colour{0};

/// Unordered edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted, and each vertex has a
/// sorted neighbour array plus the parallel array of incident edge ids, so
/// that edge-indexed side tables (masks, colours) can be addressed while
/// walking adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbours(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {adj_edge_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t max_degree() const { return max_degree_; }
  std::size_t min_degree() const;

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  /// Spanning subgraph on the same vertex set keeping the edges whose mask
  /// entry is nonzero.
  Graph masked(std::span<const std::uint8_t> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> adj_edge_;
  std::size_t max_degree_ = 0;
};

/// Total map from the edges of a graph to colour classes 0..classes-1.
///
/// Carries its own copy of the (sorted, canonical) edge list so a colouring
/// can be saved, loaded and verified without the graph it came from.
struct EdgeColouring {
  std::vector<Edge> edges;
  std::vector<Colour> colour;
  std::size_t classes = 0;

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;
};

/// Builds a colouring of g from per-edge colours (indexed by edge id).
/// Colour ids are renumbered to 0..k-1 preserving their relative order.
EdgeColouring make_edge_colouring(const Graph& g, std::vector<Colour> colour);

/// Relabels arbitrary colour ids to a contiguous range, preserving order.
/// Returns the number of distinct colours.
std::size_t compact_colours(std::vector<Colour>& colour);

/// Partial or total map from vertices to colour ids in [0, palette).
struct VertexColouring {
  std::vector<Colour> colour;
  std::size_t palette = 0;

  bool is_total() const;
  bool is_coloured(Vertex v) const { return colour[v] != kNoColour; }
};

}  // namespace c4free
