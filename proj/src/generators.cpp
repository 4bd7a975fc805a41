#include "c4free/generators.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <unordered_set>

#include "c4free/rng.hpp"

namespace c4free {

Graph complete_graph(std::size_t t) {
  std::vector<Edge> edges;
  edges.reserve(t * (t - (t > 0 ? 1 : 0)) / 2);
  for (Vertex u = 0; u < t; ++u) {
    for (Vertex v = u + 1; v < t; ++v) edges.push_back({u, v});
  }
  return Graph(t, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
  }
  return Graph(a + b, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 1) return Graph(n, {});
  if (n == 2) return Graph(2, {{0, 1}});
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& x : code) x = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> deg(n, 1);
  for (auto x : code) ++deg[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (auto x : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, x));
    if (--deg[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.push_back(make_edge(a, leaves.top()));
  return Graph(n, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, int max_restarts) {
  if ((n * d) % 2 != 0) throw GraphError("random_regular: n*d must be even");
  if (d >= n && !(n == 0 && d == 0)) throw GraphError("random_regular: need d < n");
  if (d == 0) return Graph(n, {});

  Rng rng(seed);
  auto key = [n](Vertex a, Vertex b) {
    auto e = make_edge(a, b);
    return static_cast<std::uint64_t>(e.u) * n + e.v;
  };
  std::unordered_set<std::uint64_t> present;
  std::vector<Edge> edges;
  std::vector<Vertex> stubs;
  std::vector<std::pair<std::size_t, std::size_t>> candidates;

  for (int attempt = 0; attempt <= max_restarts; ++attempt) {
    present.clear();
    edges.clear();
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      const std::size_t r = stubs.size();
      std::size_t pick_i = r;
      std::size_t pick_j = r;
      for (int tries = 0; tries < 64; ++tries) {
        std::size_t i = rng.below(r);
        std::size_t j = rng.below(r);
        if (stubs[i] == stubs[j] || present.count(key(stubs[i], stubs[j]))) continue;
        pick_i = i;
        pick_j = j;
        break;
      }
      if (pick_i == r) {
        // Rejections piled up: decide exactly whether any valid pair is left.
        candidates.clear();
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = i + 1; j < r; ++j) {
            if (stubs[i] != stubs[j] && !present.count(key(stubs[i], stubs[j]))) {
              candidates.emplace_back(i, j);
            }
          }
        }
        if (candidates.empty()) {
          // Only self-pairs or repeated pairs remain: splice two leftover
          // stubs a, b into a random edge xy as ax and by instead.
          const Vertex a = stubs[r - 1];
          const Vertex b = stubs[r - 2];
          bool spliced = false;
          for (int tries = 0; tries < 1024 && !spliced && !edges.empty(); ++tries) {
            const std::size_t k = rng.below(edges.size());
            Vertex x = edges[k].u;
            Vertex y = edges[k].v;
            if (rng.below(2)) std::swap(x, y);
            if (x == a || x == b || y == a || y == b) continue;
            if (present.count(key(a, x)) || present.count(key(b, y))) continue;
            present.erase(key(x, y));
            present.insert(key(a, x));
            present.insert(key(b, y));
            edges[k] = make_edge(a, x);
            edges.push_back(make_edge(b, y));
            spliced = true;
          }
          if (!spliced) {
            stuck = true;
            continue;
          }
          stubs.pop_back();
          stubs.pop_back();
          continue;
        }
        std::tie(pick_i, pick_j) = candidates[rng.below(candidates.size())];
      }
      Vertex a = stubs[pick_i];
      Vertex b = stubs[pick_j];
      present.insert(key(a, b));
      edges.push_back(make_edge(a, b));
      if (pick_i < pick_j) std::swap(pick_i, pick_j);
      stubs[pick_i] = stubs.back();
      stubs.pop_back();
      stubs[pick_j] = stubs.back();
      stubs.pop_back();
    }
    if (!stuck) return Graph(n, std::move(edges));
  }
  throw GraphError("random_regular: pairing failed after " + std::to_string(max_restarts) +
                   " restarts");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("erdos_renyi: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace c4free
