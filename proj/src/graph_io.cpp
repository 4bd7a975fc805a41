#include "c4free/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <tuple>

namespace c4free {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits a line into whitespace-separated tokens. Returns false for blank
/// and comment lines.
bool tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  if (i == line.size() || line[i] == '#') return false;
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    tokens.push_back(line.substr(i, j - i));
    while (j < line.size() && is_space(line[j])) ++j;
    i = j;
  }
  return true;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct RawEdge {
  std::uint64_t u;
  std::uint64_t v;
  std::size_t line;
};

std::vector<RawEdge> read_pairs(std::istream& in) {
  std::vector<RawEdge> raw;
  std::vector<std::string_view> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(tokens.size()) + " fields");
    }
    auto u = parse_id(tokens[0], line_no);
    auto v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    raw.push_back({u, v, line_no});
  }
  if (in.bad()) throw ParseError(0, "read failure");

  auto sorted = raw;
  std::sort(sorted.begin(), sorted.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.u, a.v, a.line) < std::tie(b.u, b.v, b.line);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
      throw ParseError(sorted[i].line, "duplicate edge " + std::to_string(sorted[i].u) + " " +
                                           std::to_string(sorted[i].v) + " (first on line " +
                                           std::to_string(sorted[i - 1].line) + ")");
    }
  }
  return raw;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  auto raw = read_pairs(in);
  std::uint64_t max_id = 0;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.v >= std::numeric_limits<Vertex>::max()) {
      throw ParseError(r.line, "vertex id too large for dense ids; load with remapping");
    }
    max_id = std::max(max_id, r.v);
    edges.push_back({static_cast<Vertex>(r.u), static_cast<Vertex>(r.v)});
  }
  std::size_t n = raw.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
  return Graph(n, std::move(edges));
}

RemappedGraph load_edge_list_remapped(std::istream& in) {
  auto raw = read_pairs(in);
  RemappedGraph out;
  auto& ids = out.original_id;
  for (const auto& r : raw) {
    ids.push_back(r.u);
    ids.push_back(r.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) edges.push_back(make_edge(dense(r.u), dense(r.v)));
  out.graph = Graph(ids.size(), std::move(edges));
  return out;
}

void save_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (!out) throw std::runtime_error("write failure");
}

void save_colouring(const EdgeColouring& colouring, std::ostream& out) {
  std::vector<std::size_t> order(colouring.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (!std::is_sorted(colouring.edges.begin(), colouring.edges.end())) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return colouring.edges[a] < colouring.edges[b]; });
  }
  for (auto i : order) {
    const auto& e = colouring.edges[i];
    out << e.u << ' ' << e.v << ' ' << colouring.colour[i] << '\n';
  }
  if (!out) throw std::runtime_error("write failure");
}

EdgeColouring load_colouring(std::istream& in) {
  std::vector<std::pair<Edge, Colour>> rows;
  std::vector<std::string_view> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 'u v c', got " + std::to_string(tokens.size()) + " fields");
    }
    auto u = parse_id(tokens[0], line_no);
    auto v = parse_id(tokens[1], line_no);
    auto c = parse_id(tokens[2], line_no);
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (std::max(u, v) >= std::numeric_limits<Vertex>::max() ||
        c >= std::numeric_limits<Colour>::max()) {
      throw ParseError(line_no, "id out of range");
    }
    rows.push_back({make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), static_cast<Colour>(c)});
  }
  std::sort(rows.begin(), rows.end());
  EdgeColouring out;
  Colour max_colour = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].first == rows[i - 1].first) {
      throw ParseError(0, "edge " + std::to_string(rows[i].first.u) + " " +
                              std::to_string(rows[i].first.v) + " coloured twice");
    }
    out.edges.push_back(rows[i].first);
    out.colour.push_back(rows[i].second);
    max_colour = std::max(max_colour, rows[i].second);
  }
  std::vector<std::uint8_t> seen(rows.empty() ? 0 : max_colour + 1, 0);
  for (auto c : out.colour) seen[c] = 1;
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ParseError(0, "colour ids are not contiguous from 0");
  }
  out.classes = seen.size();
  return out;
}

void save_vertex_colouring(const VertexColouring& chi, std::ostream& out) {
  for (std::size_t v = 0; v < chi.colour.size(); ++v) {
    out << v << ' ';
    if (chi.colour[v] == kNoColour) {
      out << '-';
    } else {
      out << chi.colour[v];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failure");
}

}  // namespace c4free
