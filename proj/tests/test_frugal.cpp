#include <gtest/gtest.h>

#include <cmath>

#include "c4free/frugal.hpp"
#include "c4free/generators.hpp"
#include "c4free/rng.hpp"
#include "c4free/verify.hpp"
#include "oracles.hpp"

using namespace c4free;

namespace {

std::size_t alive_degree(const Graph& g, const std::vector<std::uint8_t>& alive, Vertex v) {
  std::size_t d = 0;
  for (auto id : g.incident_edges(v)) d += alive[id];
  return d;
}

}  // namespace

TEST(Beta, StrictValue) {
  EXPECT_NEAR(strict_beta(18.0), 0.5 * std::pow(1 - 4 / std::sqrt(18.0), 2), 1e-15);
  EXPECT_NEAR(strict_beta(18.0), 0.001636, 5e-6);
  EXPECT_NEAR(strict_beta(16.0), 0.0, 1e-15);
}

TEST(MaxCut, Examples) {
  Graph e(2, {{0, 1}});
  auto b = maxcut_bipartition(e, 1);
  EXPECT_EQ(b.cut[0], 1);

  Graph c4 = cycle_graph(4);
  auto bc = maxcut_bipartition(c4, 3);
  for (auto x : bc.cut) EXPECT_EQ(x, 1);

  Graph k3 = complete_graph(3);
  auto bt = maxcut_bipartition(k3, 5);
  EXPECT_EQ(bt.cut[0] + bt.cut[1] + bt.cut[2], 2);
}

TEST(MaxCut, HalfDegreeAndLocalOptimality) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = erdos_renyi(60, 0.2, seed);
    auto b = maxcut_bipartition(g, seed);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::size_t cut = 0;
      for (auto id : g.incident_edges(v)) cut += b.cut[id];
      ASSERT_GE(2 * cut, g.degree(v)) << "seed " << seed << " v " << v;
    }
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const auto& e = g.edge(id);
      ASSERT_EQ(b.cut[id], b.side[e.u] != b.side[e.v]);
    }
  }
}

TEST(PhaseOne, StarWithDistinctLeafColours) {
  // Centre 0 on side 1, leaves on side 0. With a huge palette the five draws
  // are distinct for this seed, so nothing is uncoloured or deleted.
  Graph star = star_graph(5);
  std::vector<std::uint8_t> side{1, 0, 0, 0, 0, 0};
  VertexColouring chi{std::vector<Colour>(6, kNoColour), 1000000};
  auto st = phase1_colour(star, std::vector<std::uint8_t>(5, 1), side, 0, {0, 1000000}, 18.0, 1, chi);
  EXPECT_TRUE(st.uncoloured.empty());
  EXPECT_EQ(st.phase1_deleted, 0u);
  for (auto a : st.alive) EXPECT_EQ(a, 1);
}

TEST(PhaseOne, SharedColourUncolorsBothLeaves) {
  // Two leaves of one centre with a single-colour palette: each leaf has one
  // conflicted neighbour and 1 >= 1 / sqrt(alpha), so both are uncoloured.
  Graph star = star_graph(2);
  std::vector<std::uint8_t> side{1, 0, 0};
  VertexColouring chi{std::vector<Colour>(3, kNoColour), 1};
  auto st = phase1_colour(star, {1, 1}, side, 0, {0, 1}, 18.0, 9, chi);
  EXPECT_EQ(st.uncoloured, (std::vector<Vertex>{1, 2}));
  EXPECT_FALSE(st.chi.is_coloured(1));
  EXPECT_FALSE(st.chi.is_coloured(2));
}

TEST(PhaseOne, UniquenessOverManySeeds) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Graph g = erdos_renyi(40, 0.25, seed);
    auto b = maxcut_bipartition(g, seed);
    const std::size_t palette = 1 + seed % 12;
    VertexColouring chi{std::vector<Colour>(40, kNoColour), palette};
    const double alpha = 0.5 + static_cast<double>(seed % 7);
    auto st = phase1_colour(g, b.cut, b.side, 0, {0, palette}, alpha, seed, chi);
    ASSERT_TRUE(oracle::unique_around(g, st.alive, b.side, 0, st.chi)) << seed;
    for (EdgeId id = 0; id < g.num_edges(); ++id) ASSERT_LE(st.alive[id], b.cut[id]);
  }
}

TEST(PhaseOne, UncolouringRuleMatchesDefinition) {
  // A retained vertex loses exactly its conflicted edges, and it was retained
  // because conflicted^2 * alpha < degree^2.
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_regular(30, 6, seed);
    auto b = maxcut_bipartition(g, seed);
    VertexColouring chi{std::vector<Colour>(30, kNoColour), 4};
    auto st = phase1_colour(g, b.cut, b.side, 0, {0, 4}, 2.0, seed, chi);
    for (Vertex a = 0; a < 30; ++a) {
      if (b.side[a] != 0 || !st.chi.is_coloured(a)) continue;
      const std::size_t before = alive_degree(g, b.cut, a);
      const std::size_t lost = before - alive_degree(g, st.alive, a);
      ASSERT_LT(static_cast<double>(lost * lost) * 2.0, static_cast<double>(before * before));
    }
  }
}

TEST(PhaseTwo, NothingToDo) {
  Graph g = path_graph(3);
  std::vector<std::uint8_t> side{0, 1, 0};
  RoundState st;
  st.alive = {1, 1};
  st.chi = {{0, kNoColour, 1}, 4};
  phase2_complete(g, st, side, 0, {0, 4}, 2.0, 2);
  EXPECT_EQ(st.phase2_deleted, 0u);
  EXPECT_EQ(st.chi.colour[0], 0u);
}

TEST(PhaseTwo, ConflictFreeVertexKeepsAllEdges) {
  Graph g = path_graph(3);
  std::vector<std::uint8_t> side{0, 1, 0};
  RoundState st;
  st.alive = {1, 1};
  st.chi = {{0, kNoColour, kNoColour}, 4};
  st.uncoloured = {2};
  phase2_complete(g, st, side, 0, {0, 4}, 2.0, 2);
  EXPECT_EQ(st.phase2_deleted, 0u);
  EXPECT_EQ(st.chi.colour[2], 1u);
}

TEST(PhaseTwo, ChoosesMinimisingColour) {
  // Side 0: vertices 0..3 (0 uncoloured), side 1: vertices 4, 5.
  // 4 sees colours {0, 1} from 1 and 2; 5 sees colour 0 from 3.
  Graph g(6, {{0, 4}, {0, 5}, {1, 4}, {2, 4}, {3, 5}});
  std::vector<std::uint8_t> side{0, 0, 0, 0, 1, 1};
  RoundState st;
  st.alive = std::vector<std::uint8_t>(g.num_edges(), 1);
  st.chi = {{kNoColour, 0, 1, 0, kNoColour, kNoColour}, 3};
  st.uncoloured = {0};
  const auto alive_before = st.alive;
  phase2_complete(g, st, side, 0, {0, 3}, 1.0, 3);

  // Exhaustive score over the palette from the pre-step state.
  std::vector<std::size_t> score(3, 0);
  for (Colour c = 0; c < 3; ++c) {
    for (Vertex b : g.neighbours(0)) {
      for (Vertex a2 : g.neighbours(b)) {
        if (a2 != 0 && alive_before[*g.edge_id(a2, b)] && st.chi.colour[a2] == c) {
          ++score[c];
          break;
        }
      }
    }
  }
  const auto best = static_cast<Colour>(std::min_element(score.begin(), score.end()) - score.begin());
  EXPECT_EQ(st.chi.colour[0], best);
  EXPECT_EQ(best, 2u);
  EXPECT_EQ(st.phase2_deleted, 0u);
}

TEST(PhaseTwo, DropsConflictedEdgesWhenForced) {
  // One colour only: vertex 0 must share it with 1 (via 4), so edge 0-4 goes.
  Graph g(5, {{0, 4}, {0, 3}, {1, 4}});
  std::vector<std::uint8_t> side{0, 0, 1, 1, 1};
  RoundState st;
  st.alive = std::vector<std::uint8_t>(g.num_edges(), 1);
  st.chi = {{kNoColour, 0, kNoColour, kNoColour, kNoColour}, 1};
  st.uncoloured = {0};
  // alpha * max_degree must not exceed the palette, so alpha = 0.5 here.
  phase2_complete(g, st, side, 0, {0, 1}, 0.5, 2);
  EXPECT_EQ(st.phase2_deleted, 1u);
  EXPECT_EQ(st.alive[*g.edge_id(0, 4)], 0);
  EXPECT_EQ(st.alive[*g.edge_id(0, 3)], 1);
}

TEST(FrugalColour, PerfectMatching) {
  std::vector<Edge> m;
  for (Vertex i = 0; i < 20; i += 2) m.push_back({i, i + 1});
  Graph g(20, m);
  FrugalParams p;
  p.mode = FrugalMode::empirical;
  p.alpha = 3.0;
  auto r = frugal_colour(g, p);
  EXPECT_EQ(r.h.num_edges(), g.num_edges());
  EXPECT_DOUBLE_EQ(r.min_retention, 1.0);
  EXPECT_TRUE(oracle::frugal_proper(r.h, r.chi.colour));
}

TEST(FrugalColour, StrictOnK3232) {
  Graph g = complete_bipartite(32, 32);
  FrugalParams p;
  p.alpha = 18.0;
  p.seed = 1;
  auto r = frugal_colour(g, p);
  EXPECT_EQ(r.chi.palette, 2 * static_cast<std::size_t>(std::ceil(18.0 * 32)));
  EXPECT_TRUE(r.chi.is_total());
  EXPECT_TRUE(oracle::frugal_proper(r.h, r.chi.colour));
  EXPECT_FALSE(r.degraded);
  for (Vertex v = 0; v < 64; ++v) {
    EXPECT_GE(static_cast<double>(r.h.degree(v)), strict_beta(18.0) * 32);
  }
}

TEST(FrugalColour, EmpiricalOnCubicGraph) {
  Graph g = random_regular(1000, 3, 4);
  FrugalParams p;
  p.mode = FrugalMode::empirical;
  p.alpha = 2.0;
  p.empirical_retention = 0.3;
  p.seed = 17;
  auto r = frugal_colour(g, p);
  EXPECT_TRUE(oracle::frugal_proper(r.h, r.chi.colour));
  EXPECT_LE(r.chi.palette, 2 * static_cast<std::size_t>(std::ceil(2.0 * 3)));
  if (!r.degraded) {
    EXPECT_GE(r.min_retention, 0.3);
  } else {
    EXPECT_EQ(r.resamples_used, p.max_resamples);
  }
}

TEST(FrugalColour, HIsSpanningSubgraph) {
  Graph g = erdos_renyi(200, 0.1, 3);
  FrugalParams p;
  p.mode = FrugalMode::empirical;
  p.alpha = 1.0;
  auto r = frugal_colour(g, p);
  EXPECT_EQ(r.h.num_vertices(), g.num_vertices());
  for (const auto& e : r.h.edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
  for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_LT(r.chi.colour[v], r.chi.palette);
}

TEST(FrugalColour, StrictPreconditions) {
  FrugalParams p;
  EXPECT_THROW(frugal_colour(cycle_graph(10), p), PreconditionError);
  p.alpha = 10;
  EXPECT_THROW(frugal_colour(complete_bipartite(20, 20), p), PreconditionError);
  // A pendant vertex violates the minimum degree requirement.
  const Graph k20 = complete_graph(20);
  std::vector<Edge> edges(k20.edges().begin(), k20.edges().end());
  edges.push_back({0, 20});
  p.alpha = 18;
  EXPECT_THROW(frugal_colour(Graph(21, edges), p), PreconditionError);
  FrugalParams e;
  e.mode = FrugalMode::empirical;
  EXPECT_THROW(frugal_colour(Graph(4, {}), e), PreconditionError);
  e.empirical_retention = 1.0;
  EXPECT_THROW(frugal_colour(cycle_graph(6), e), PreconditionError);
  e.empirical_retention = -0.1;
  EXPECT_THROW(frugal_colour(cycle_graph(6), e), PreconditionError);
  e.empirical_retention = 0.0;
  EXPECT_FALSE(frugal_colour(cycle_graph(6), e).degraded);
}

TEST(FrugalColour, Deterministic) {
  Graph g = random_regular(500, 20, 8);
  FrugalParams p;
  p.mode = FrugalMode::empirical;
  p.alpha = 2.0;
  p.seed = 99;
  auto a = frugal_colour(g, p);
  auto b = frugal_colour(g, p);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.chi.colour, b.chi.colour);
  EXPECT_EQ(a.side, b.side);
  p.seed = 100;
  EXPECT_NE(frugal_colour(g, p).chi.colour, a.chi.colour);
}

TEST(FrugalColour, PhaseTwoRetentionRecorded) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_regular(400, 32, seed);
    FrugalParams p;
    p.seed = seed;
    auto r = frugal_colour(g, p);
    for (const auto& round : r.rounds) EXPECT_GE(round.phase2_worst_keep, 1.0 - 1.0 / p.alpha - 1e-12);
  }
}
