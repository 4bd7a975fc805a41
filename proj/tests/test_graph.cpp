#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "c4free/generators.hpp"
#include "c4free/graph.hpp"
#include "c4free/graph_io.hpp"

using namespace c4free;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

void expect_regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) ASSERT_EQ(g.degree(v), d) << "vertex " << v;
}

void expect_consistent(const Graph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbours(v);
    auto ids = g.incident_edges(v);
    ASSERT_EQ(nb.size(), g.degree(v));
    ASSERT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      ASSERT_NE(nb[i], v);
      ASSERT_TRUE(g.has_edge(nb[i], v));
      ASSERT_EQ(g.edge(ids[i]), make_edge(v, nb[i]));
    }
    total += nb.size();
  }
  EXPECT_EQ(total, 2 * g.num_edges());
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(Graph, AdjacencyMatchesEdges) {
  Graph g(5, {{3, 1}, {0, 4}, {1, 2}, {0, 1}});
  expect_consistent(g);
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(g.min_degree(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(Graph, MaskedKeepsVertexSet) {
  Graph g = cycle_graph(5);
  std::vector<std::uint8_t> keep{1, 0, 1, 0, 1};
  Graph h = g.masked(keep);
  EXPECT_EQ(h.num_vertices(), 5u);
  EXPECT_EQ(h.num_edges(), 3u);
}

TEST(Graph, EdgeColouringCompactsIds) {
  Graph g = path_graph(4);
  auto col = make_edge_colouring(g, {7, 3, 7});
  EXPECT_EQ(col.classes, 2u);
  EXPECT_EQ(col.colour, (std::vector<Colour>{1, 0, 1}));
}

TEST(Generators, CompleteGraphCounts) {
  EXPECT_EQ(complete_graph(1).num_edges(), 0u);
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  EXPECT_EQ(complete_graph(8).num_edges(), 28u);
}

TEST(Generators, NamedGraphs) {
  EXPECT_EQ(complete_bipartite(3, 4).num_edges(), 12u);
  EXPECT_EQ(cycle_graph(6).num_edges(), 6u);
  EXPECT_EQ(path_graph(6).num_edges(), 5u);
  EXPECT_EQ(star_graph(5).num_edges(), 5u);
  Graph p = petersen_graph();
  EXPECT_EQ(p.num_vertices(), 10u);
  EXPECT_EQ(p.num_edges(), 15u);
  expect_regular(p, 3);
  auto t = random_tree(40, 3);
  EXPECT_EQ(t.num_edges(), 39u);
}

TEST(Generators, RandomRegularK4) {
  EXPECT_EQ(random_regular(4, 3, 5), complete_graph(4));
}

TEST(Generators, RandomRegularDegrees) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = random_regular(10, 3, seed);
    expect_regular(g, 3);
    expect_consistent(g);
  }
  Graph big = random_regular(2000, 64, 7);
  expect_regular(big, 64);
  Graph dense = random_regular(300, 256, 2);
  expect_regular(dense, 256);
}

TEST(Generators, RandomRegularRejectsBadParameters) {
  EXPECT_THROW(random_regular(5, 3, 1), GraphError);
  EXPECT_THROW(random_regular(4, 4, 1), GraphError);
}

TEST(Generators, Reproducible) {
  EXPECT_EQ(random_regular(100, 16, 3), random_regular(100, 16, 3));
  EXPECT_NE(random_regular(100, 16, 3), random_regular(100, 16, 4));
  EXPECT_EQ(erdos_renyi(200, 0.1, 9), erdos_renyi(200, 0.1, 9));
  EXPECT_EQ(random_tree(50, 2), random_tree(50, 2));
}

TEST(Generators, ErdosRenyiExtremes) {
  EXPECT_EQ(erdos_renyi(30, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(erdos_renyi(30, 1.0, 1), complete_graph(30));
}

TEST(Generators, ErdosRenyiEdgeCount) {
  // Binomial(4950, 0.1): mean 495, sd sqrt(4950 * 0.1 * 0.9).
  const double sd = std::sqrt(4950 * 0.1 * 0.9);
  const auto m = static_cast<double>(erdos_renyi(100, 0.1, 7).num_edges());
  EXPECT_LE(std::abs(m - 495.0), 5 * sd);
}

TEST(EdgeListIo, ParsesWithComments) {
  Graph g = parse("# header\n0 1\n\n1 2\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeListIo, Errors) {
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_THROW(parse("0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse("0 1\n1 0\n"), ParseError);
  try {
    parse("0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("0 1 2\n"), ParseError);
}

TEST(EdgeListIo, RemapCompactsIds) {
  std::istringstream in("10 30\n30 20\n");
  auto r = load_edge_list_remapped(in);
  EXPECT_EQ(r.graph.num_vertices(), 3u);
  EXPECT_EQ(r.original_id, (std::vector<std::uint64_t>{10, 20, 30}));
  EXPECT_TRUE(r.graph.has_edge(0, 2));
  EXPECT_TRUE(r.graph.has_edge(1, 2));
}

TEST(ColouringIo, SingleEdge) {
  Graph g(2, {{0, 1}});
  std::ostringstream out;
  save_colouring(make_edge_colouring(g, {0}), out);
  EXPECT_EQ(out.str(), "0 1 0\n");
}

TEST(ColouringIo, TriangleAndRoundTrip) {
  Graph g = complete_graph(3);
  auto col = make_edge_colouring(g, {0, 0, 0});
  std::ostringstream out;
  save_colouring(col, out);
  EXPECT_EQ(out.str(), "0 1 0\n0 2 0\n1 2 0\n");
  std::istringstream in(out.str());
  EXPECT_EQ(load_colouring(in), col);

  Graph r = random_regular(60, 6, 4);
  std::vector<Colour> colours(r.num_edges());
  for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<Colour>(i % 5);
  auto big = make_edge_colouring(r, colours);
  std::ostringstream o2;
  save_colouring(big, o2);
  std::istringstream i2(o2.str());
  EXPECT_EQ(load_colouring(i2), big);
}

TEST(ColouringIo, RejectsGapsAndRepeats) {
  std::istringstream gap("0 1 0\n1 2 2\n");
  EXPECT_THROW(load_colouring(gap), ParseError);
  std::istringstream twice("0 1 0\n1 0 1\n");
  EXPECT_THROW(load_colouring(twice), ParseError);
}

TEST(EdgeListIo, SaveLoadRoundTrip) {
  Graph g = random_regular(50, 4, 8);
  std::ostringstream out;
  save_edge_list(g, out);
  EXPECT_EQ(parse(out.str()), g);
}
