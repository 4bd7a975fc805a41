#include "c4free/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "c4free/verify.hpp"

namespace c4free {
namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

/// Would adding uv to a graph with adjacency masks `adj` close a 4-cycle?
/// Requires uv absent.
bool closes_c4(const Mask* adj, Vertex u, Vertex v) {
  const Mask targets = adj[v] & ~bit(u);
  if (targets == 0) return false;
  for (Mask xs = adj[u]; xs != 0; xs &= xs - 1) {
    auto x = static_cast<Vertex>(std::countr_zero(xs));
    if (adj[x] & targets) return true;
  }
  return false;
}

/// Vertex-by-vertex search: vertex v picks its neighbours among 0..v-1.
/// covered[x] marks the y that already share a neighbour with x; v may join
/// x and y only if that pair is uncovered, which is exactly C4-freeness.
/// Vertex 0 is taken to have the maximum degree, max_deg, with neighbours
/// 1..max_deg, and every degree stays at most max_deg.
struct ExSearch {
  std::size_t n;
  std::vector<std::size_t> ex_below;  // ex(k) for k < n
  std::size_t max_deg = 0;
  std::vector<Mask> adj;
  std::vector<Mask> covered;
  std::vector<std::size_t> deg;
  std::size_t best = 0;

  /// Most edges w vertices can send into a part with `pairs` uncovered
  /// pairs and f vertices: a vertex with j such edges uses j(j-1)/2 pairs.
  std::size_t cross_bound(std::size_t w, std::size_t f, std::size_t pairs) const {
    std::size_t total = 0;
    for (std::size_t j = 0; j < std::min(f, max_deg); ++j) {
      const std::size_t take = j == 0 ? w : std::min(w, pairs / j);
      total += take;
      if (take < w) break;
      pairs -= take * j;
    }
    return total;
  }

  std::size_t uncovered_pairs(std::size_t f) const {
    const Mask low = f == 64 ? ~Mask{0} : bit(static_cast<Vertex>(f)) - 1;
    std::size_t twice = 0;
    for (std::size_t x = 0; x < f; ++x) twice += static_cast<std::size_t>(std::popcount(covered[x] & low));
    return f * (f - 1) / 2 - twice / 2;
  }

  void vertex(std::size_t v, std::size_t count) {
    if (v == n) {
      best = std::max(best, count);
      return;
    }
    const std::size_t w = n - v;
    if (v > 0 && count + ex_below[w] + cross_bound(w, v, uncovered_pairs(v)) <= best) return;
    if (v == 0) {
      commit(0, 0, 0);
    } else if (v <= max_deg) {
      choose(v, v, bit(0), 1, count);
    } else {
      choose(v, v, 0, 0, count);
    }
  }

  void choose(std::size_t v, std::size_t idx, Mask picked, std::size_t size, std::size_t count) {
    // Candidates still open below idx bound how many more v can take.
    const std::size_t more = std::min(idx, max_deg - size);
    if (count + size + more + ex_below[n - v - 1] +
            cross_bound(n - v - 1, v + 1, uncovered_pairs(v) + v) <= best) {
      return;
    }
    if (idx == 0 || size == max_deg) {
      commit(v, picked, count + size);
      return;
    }
    const auto x = static_cast<Vertex>(idx - 1);
    if (x > 0 && deg[x] < max_deg && (picked & covered[x]) == 0) {
      choose(v, idx - 1, picked | bit(x), size + 1, count);
    }
    choose(v, idx - 1, picked, size, count);
  }

  void commit(std::size_t v, Mask picked, std::size_t count) {
    const auto saved_adj = adj;
    const auto saved_covered = covered;
    const auto saved_deg = deg;
    for (Mask xs = picked; xs != 0; xs &= xs - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(xs));
      covered[x] |= picked & ~bit(x);
      for (Mask zs = adj[x]; zs != 0; zs &= zs - 1) {
        const auto z = static_cast<Vertex>(std::countr_zero(zs));
        covered[v] |= bit(z);
        covered[z] |= bit(static_cast<Vertex>(v));
      }
      adj[x] |= bit(static_cast<Vertex>(v));
      ++deg[x];
    }
    adj[v] = picked;
    deg[v] = static_cast<std::size_t>(std::popcount(picked));
    vertex(v + 1, count);
    adj = saved_adj;
    covered = saved_covered;
    deg = saved_deg;
  }
};

std::uint64_t isqrt_ceil(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : r + 1;
}

/// Edge order for the colouring search: each next edge is the one touching
/// the most already-ordered edges, so 4-cycles close as early as possible.
std::vector<EdgeId> line_graph_order(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::vector<std::size_t> placed_touching(m, 0);
  std::vector<std::uint8_t> placed(m, 0);
  std::vector<EdgeId> order;
  order.reserve(m);
  auto line_degree = [&](EdgeId id) {
    const auto& e = g.edge(id);
    return g.degree(e.u) + g.degree(e.v);
  };
  for (std::size_t step = 0; step < m; ++step) {
    EdgeId pick = 0;
    bool have = false;
    for (EdgeId id = 0; id < m; ++id) {
      if (placed[id]) continue;
      if (!have || placed_touching[id] > placed_touching[pick] ||
          (placed_touching[id] == placed_touching[pick] && line_degree(id) > line_degree(pick))) {
        pick = id;
        have = true;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    const auto& e = g.edge(pick);
    for (Vertex end : {e.u, e.v}) {
      for (EdgeId other : g.incident_edges(end)) {
        if (!placed[other]) ++placed_touching[other];
      }
    }
  }
  return order;
}

struct ColourSearch {
  const Graph& g;
  std::size_t k;
  std::vector<EdgeId> order;
  std::vector<Mask> adj;  // adj[c * n + v]
  std::vector<Colour> colour;

  Mask* class_adj(Colour c) { return adj.data() + c * g.num_vertices(); }

  bool run(std::size_t i, Colour used) {
    if (i == order.size()) return true;
    const auto& e = g.edge(order[i]);
    const Colour limit = static_cast<Colour>(std::min<std::size_t>(k, used + 1));
    for (Colour c = 0; c < limit; ++c) {
      Mask* a = class_adj(c);
      if (closes_c4(a, e.u, e.v)) continue;
      a[e.u] |= bit(e.v);
      a[e.v] |= bit(e.u);
      colour[order[i]] = c;
      if (run(i + 1, std::max<Colour>(used, c + 1))) return true;
      a[e.u] &= ~bit(e.v);
      a[e.v] &= ~bit(e.u);
    }
    return false;
  }
};

}  // namespace

std::size_t exact_ex_c4(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw OracleCapExceeded("exact_ex_c4: n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  }
  if (n > 64) throw OracleCapExceeded("exact_ex_c4: n above 64");
  if (n < 2) return 0;
  ExSearch search{n, std::vector<std::size_t>(n, 0), 0, {}, {}, {}};
  for (std::size_t k = 2; k < n; ++k) search.ex_below[k] = exact_ex_c4(k, cap);
  // Adding an isolated vertex shows ex(n) >= ex(n - 1).
  search.best = search.ex_below[n - 1];
  for (std::size_t d = n - 1; d >= 1 && n * d / 2 > search.best; --d) {
    search.max_deg = d;
    search.adj.assign(n, 0);
    search.covered.assign(n, 0);
    search.deg.assign(n, 0);
    search.vertex(0, 0);
  }
  return search.best;
}

std::uint64_t ex_c4_upper_bound(std::uint64_t n) {
  if (n == 0) return 0;
  return n * (1 + isqrt_ceil(4 * n - 3)) / 4;
}

std::uint64_t phi_lower_bound(std::uint64_t delta, std::optional<std::uint64_t> ex_value) {
  if (delta == 0) return 0;
  const std::uint64_t n = delta + 1;
  std::uint64_t ex = 0;
  if (ex_value) {
    ex = *ex_value;
  } else if (n <= kExactExCap) {
    ex = exact_ex_c4(n);
  } else {
    ex = ex_c4_upper_bound(n);
  }
  if (ex == 0) throw std::invalid_argument("phi_lower_bound: ex value must be positive");
  const std::uint64_t pairs = n * (n - 1) / 2;
  return (pairs + ex - 1) / ex;
}

std::size_t OracleLimits::edge_cap(std::size_t colours) const {
  if (colours <= 1) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(std::floor(static_cast<double>(edges_at_3) * std::log(3.0) /
                                             std::log(static_cast<double>(colours)) + 1e-9));
}

std::optional<EdgeColouring> find_c4_free_colouring(const Graph& g, std::size_t k,
                                                     const OracleLimits& limits) {
  if (k == 1) {
    if (find_c4(g)) return std::nullopt;
    return make_edge_colouring(g, std::vector<Colour>(g.num_edges(), 0));
  }
  if (g.num_vertices() > 64) throw OracleCapExceeded("colouring search: more than 64 vertices");
  if (g.num_edges() > limits.edge_cap(k)) {
    throw OracleCapExceeded("colouring search: " + std::to_string(g.num_edges()) +
                            " edges exceed the cap of " + std::to_string(limits.edge_cap(k)) +
                            " at " + std::to_string(k) + " colours");
  }
  if (g.num_edges() == 0) return make_edge_colouring(g, {});
  if (k == 0) return std::nullopt;
  ColourSearch search{g, k, line_graph_order(g), std::vector<Mask>(k * g.num_vertices(), 0),
                      std::vector<Colour>(g.num_edges(), 0)};
  if (!search.run(0, 0)) return std::nullopt;
  return make_edge_colouring(g, std::move(search.colour));
}

std::size_t exact_phi_c4(const Graph& g, std::size_t max_colours, const OracleLimits& limits) {
  if (g.num_edges() == 0) return 0;
  for (std::size_t m = 1; m <= max_colours; ++m) {
    if (find_c4_free_colouring(g, m, limits)) return m;
  }
  throw OracleCapExceeded("exact_phi_c4: no C4-free colouring with at most " +
                          std::to_string(max_colours) + " colours");
}

}  // namespace c4free
