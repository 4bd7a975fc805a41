#include "c4free/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace c4free {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::c4: return "c4";
    case ViolationKind::improper: return "improper";
    case ViolationKind::not_frugal: return "not_frugal";
    case ViolationKind::cycle: return "cycle";
  }
  return "unknown";
}

void VerificationReport::add(Violation v) {
  ok = false;
  ++violation_count;
  if (violations.size() < kMaxStored) violations.push_back(std::move(v));
}

namespace {

std::string join(const std::vector<Vertex>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string VerificationReport::summary() const {
  if (ok) return "OK";
  const auto& v = violations.front();
  std::string out = std::string("FAIL kind=") + to_string(v.kind) + " witness=" + join(v.witness);
  if (v.colour != kNoColour) out += " class=" + std::to_string(v.colour);
  return out;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  if (ok) {
    out << "verification passed\n";
    return out.str();
  }
  out << "verification failed: " << violation_count << " violation(s)";
  if (violation_count > violations.size()) out << ", first " << violations.size() << " shown";
  out << '\n';
  for (const auto& v : violations) {
    out << "  " << to_string(v.kind) << ": " << join(v.witness);
    if (v.colour != kNoColour) out << " (colour " << v.colour << ')';
    out << '\n';
  }
  return out.str();
}

std::optional<std::array<Vertex, 4>> find_c4(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // seen_from[y] == u + 1 means y was reached from u through middle[y].
  std::vector<Vertex> seen_from(n, 0);
  std::vector<Vertex> middle(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x : g.neighbours(u)) {
      for (Vertex y : g.neighbours(x)) {
        if (y <= u) continue;
        if (seen_from[y] == u + 1) return std::array<Vertex, 4>{u, middle[y], y, x};
        seen_from[y] = u + 1;
        middle[y] = x;
      }
    }
  }
  return std::nullopt;
}

namespace {

void require_total(const Graph& g, const EdgeColouring& colouring) {
  if (colouring.colour.size() != colouring.edges.size()) {
    throw std::invalid_argument("colouring has mismatched edge and colour arrays");
  }
  if (colouring.edges.size() != g.num_edges()) {
    throw std::invalid_argument("colouring covers " + std::to_string(colouring.edges.size()) +
                                " edges, graph has " + std::to_string(g.num_edges()));
  }
  auto sorted = colouring.edges;
  if (!std::is_sorted(sorted.begin(), sorted.end())) std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), g.edges().begin())) {
    throw std::invalid_argument("colouring is not total on the graph's edge set");
  }
}

std::vector<std::vector<Edge>> bucket_by_class(const EdgeColouring& colouring) {
  Colour top = 0;
  for (auto c : colouring.colour) top = std::max(top, c + 1);
  std::vector<std::vector<Edge>> classes(top);
  for (std::size_t i = 0; i < colouring.edges.size(); ++i) {
    classes[colouring.colour[i]].push_back(colouring.edges[i]);
  }
  return classes;
}

std::size_t vertex_bound(const EdgeColouring& colouring) {
  std::size_t n = 0;
  for (const auto& e : colouring.edges) n = std::max<std::size_t>(n, e.v + 1);
  return n;
}

VerificationReport check_classes_c4(std::size_t n, const EdgeColouring& colouring) {
  VerificationReport report;
  auto classes = bucket_by_class(colouring);
  for (Colour c = 0; c < classes.size(); ++c) {
    if (classes[c].size() < 4) continue;
    Graph part(n, std::move(classes[c]));
    if (auto cyc = find_c4(part)) {
      report.add({ViolationKind::c4, {(*cyc)[0], (*cyc)[1], (*cyc)[2], (*cyc)[3]}, c});
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_c4_free_colouring(const Graph& g, const EdgeColouring& colouring) {
  require_total(g, colouring);
  return check_classes_c4(g.num_vertices(), colouring);
}

VerificationReport verify_c4_free_colouring(const EdgeColouring& colouring) {
  if (colouring.colour.size() != colouring.edges.size()) {
    throw std::invalid_argument("colouring has mismatched edge and colour arrays");
  }
  return check_classes_c4(vertex_bound(colouring), colouring);
}

VerificationReport verify_frugal_proper(const Graph& h, const VertexColouring& chi) {
  if (chi.colour.size() != h.num_vertices()) {
    throw std::invalid_argument("vertex colouring has " + std::to_string(chi.colour.size()) +
                                " entries, graph has " + std::to_string(h.num_vertices()));
  }
  if (!chi.is_total()) throw std::invalid_argument("vertex colouring is partial");

  VerificationReport report;
  for (const auto& e : h.edges()) {
    if (chi.colour[e.u] == chi.colour[e.v]) {
      report.add({ViolationKind::improper, {e.u, e.v}, chi.colour[e.u]});
    }
  }
  std::vector<std::pair<Colour, Vertex>> around;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    around.clear();
    for (Vertex w : h.neighbours(v)) around.emplace_back(chi.colour[w], w);
    std::sort(around.begin(), around.end());
    for (std::size_t i = 1; i < around.size(); ++i) {
      if (around[i].first == around[i - 1].first) {
        report.add({ViolationKind::not_frugal, {v, around[i - 1].second, around[i].second},
                    around[i].first});
      }
    }
  }
  return report;
}

namespace {

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_forest(std::size_t n, std::span<const Edge> edges) {
  DisjointSets sets(n);
  for (const auto& e : edges) {
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

VerificationReport verify_forest_classes(const EdgeColouring& colouring) {
  VerificationReport report;
  const std::size_t n = vertex_bound(colouring);
  auto classes = bucket_by_class(colouring);
  for (Colour c = 0; c < classes.size(); ++c) {
    DisjointSets sets(n);
    for (const auto& e : classes[c]) {
      if (!sets.unite(e.u, e.v)) {
        report.add({ViolationKind::cycle, {e.u, e.v}, c});
        break;
      }
    }
  }
  return report;
}

bool is_sidon(std::span<const std::uint64_t> set, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("is_sidon: modulus must be positive");
  std::vector<std::uint64_t> s;
  s.reserve(set.size());
  for (auto x : set) s.push_back(x % m);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<std::uint64_t> sums;
  sums.reserve(s.size() * (s.size() + 1) / 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) sums.push_back((s[i] + s[j]) % m);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace c4free
