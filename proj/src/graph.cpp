#include "c4free/graph.hpp"

#include <algorithm>
#include <limits>

namespace c4free {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (edges_.size() > std::numeric_limits<EdgeId>::max()) {
    throw GraphError("too many edges");
  }
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n_ || e.v >= n_) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }

  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    offsets_[v + 1] = offsets_[v] + deg[v];
    max_degree_ = std::max(max_degree_, deg[v]);
  }
  adj_.resize(offsets_[n_]);
  adj_edge_.resize(offsets_[n_]);
  // Sorted edge order makes every neighbour array come out sorted.
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = id;
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = id;
  }
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbours(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::masked(std::span<const std::uint8_t> keep) const {
  std::vector<Edge> kept;
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    if (keep[id]) kept.push_back(edges_[id]);
  }
  return Graph(n_, std::move(kept));
}

std::size_t compact_colours(std::vector<Colour>& colour) {
  std::vector<Colour> used(colour.begin(), colour.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& c : colour) {
    c = static_cast<Colour>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  }
  return used.size();
}

EdgeColouring make_edge_colouring(const Graph& g, std::vector<Colour> colour) {
  if (colour.size() != g.num_edges()) {
    throw GraphError("colouring size does not match edge count");
  }
  EdgeColouring out;
  out.edges.assign(g.edges().begin(), g.edges().end());
  out.classes = compact_colours(colour);
  out.colour = std::move(colour);
  return out;
}

bool VertexColouring::is_total() const {
  return std::none_of(colour.begin(), colour.end(), [](Colour c) { return c == kNoColour; });
}

}  // namespace c4free
