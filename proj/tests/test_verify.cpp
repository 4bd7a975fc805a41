#include <gtest/gtest.h>

#include "c4free/generators.hpp"
#include "c4free/rng.hpp"
#include "c4free/verify.hpp"
#include "oracles.hpp"

using namespace c4free;

namespace {

std::vector<Vertex> as_vector(const std::array<Vertex, 4>& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST(FindC4, Examples) {
  auto k22 = complete_bipartite(2, 2);
  auto c = find_c4(k22);
  ASSERT_TRUE(c);
  EXPECT_TRUE(oracle::is_c4_witness({k22.edges().begin(), k22.edges().end()}, as_vector(*c)));
  EXPECT_FALSE(find_c4(complete_graph(3)));
  EXPECT_FALSE(find_c4(petersen_graph()));
  EXPECT_FALSE(find_c4(cycle_graph(5)));
  EXPECT_TRUE(find_c4(cycle_graph(4)));
}

TEST(FindC4, PetersenHasGirthFive) {
  auto p = petersen_graph();
  EXPECT_FALSE(oracle::has_c4_by_subsets(10, {p.edges().begin(), p.edges().end()}));
}

TEST(FindC4, AgreesWithSubsetEnumeration) {
  Rng rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const double p = rng.unit();
    Graph g = erdos_renyi(n, p, rng.next());
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto found = find_c4(g);
    ASSERT_EQ(found.has_value(), oracle::has_c4_by_subsets(n, edges)) << "trial " << trial;
    if (found) {
      ASSERT_TRUE(oracle::is_c4_witness(edges, as_vector(*found)));
    }
  }
}

TEST(VerifyColouring, AlternatingC4) {
  Graph c4 = cycle_graph(4);
  // Edges sorted: 01, 03, 12, 23; alternating around the cycle 0-1-2-3.
  auto ok = verify_c4_free_colouring(c4, make_edge_colouring(c4, {0, 1, 1, 0}));
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.summary(), "OK");
}

TEST(VerifyColouring, MonochromaticC4) {
  Graph c4 = cycle_graph(4);
  auto bad = verify_c4_free_colouring(c4, make_edge_colouring(c4, {0, 0, 0, 0}));
  ASSERT_FALSE(bad.ok);
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_EQ(bad.violations[0].kind, ViolationKind::c4);
  EXPECT_TRUE(oracle::is_c4_witness({c4.edges().begin(), c4.edges().end()}, bad.violations[0].witness));
  EXPECT_EQ(bad.summary().rfind("FAIL kind=c4 witness=", 0), 0u);
}

TEST(VerifyColouring, K5AsTwoFiveCycles) {
  Graph k5 = complete_graph(5);
  // Class 0 is the cycle 0-1-2-3-4, class 1 the pentagram 0-2-4-1-3.
  std::vector<Colour> colours;
  for (const auto& e : k5.edges()) colours.push_back((e.v - e.u == 1 || e.v - e.u == 4) ? 0 : 1);
  auto col = make_edge_colouring(k5, colours);
  EXPECT_TRUE(verify_c4_free_colouring(k5, col).ok);
  EXPECT_TRUE(oracle::colouring_c4_free_small(col));
}

TEST(VerifyColouring, RejectsPartial) {
  Graph g = path_graph(3);
  EdgeColouring col{{{0, 1}}, {0}, 1};
  EXPECT_THROW(verify_c4_free_colouring(g, col), std::invalid_argument);
}

TEST(VerifyColouring, AgreesWithPerClassOracle) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng.below(5);
    Graph g = erdos_renyi(n, 0.7, rng.next());
    std::vector<Colour> colours(g.num_edges());
    const auto k = 1 + rng.below(3);
    for (auto& c : colours) c = static_cast<Colour>(rng.below(k));
    auto col = make_edge_colouring(g, colours);
    ASSERT_EQ(verify_c4_free_colouring(g, col).ok, oracle::colouring_c4_free_small(col));
    ASSERT_EQ(oracle::colouring_c4_free(col), oracle::colouring_c4_free_small(col));
  }
}

TEST(VerifyFrugal, PathExamples) {
  Graph p = path_graph(3);
  EXPECT_TRUE(verify_frugal_proper(p, {{0, 1, 2}, 3}).ok);
  auto not_frugal = verify_frugal_proper(p, {{0, 1, 0}, 3});
  ASSERT_FALSE(not_frugal.ok);
  EXPECT_EQ(not_frugal.violations[0].kind, ViolationKind::not_frugal);
  EXPECT_EQ(not_frugal.violations[0].witness[0], 1u);
  Graph e(2, {{0, 1}});
  auto improper = verify_frugal_proper(e, {{0, 0}, 1});
  ASSERT_FALSE(improper.ok);
  EXPECT_EQ(improper.violations[0].kind, ViolationKind::improper);
}

TEST(VerifyFrugal, RejectsPartial) {
  Graph p = path_graph(3);
  EXPECT_THROW(verify_frugal_proper(p, {{0, kNoColour, 2}, 3}), std::invalid_argument);
}

TEST(VerifyFrugal, AgreesWithDefinition) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = erdos_renyi(9, 0.4, rng.next());
    std::vector<Colour> chi(9);
    for (auto& c : chi) c = static_cast<Colour>(rng.below(6));
    ASSERT_EQ(verify_frugal_proper(g, {chi, 6}).ok, oracle::frugal_proper(g, chi));
  }
}

TEST(VerifyForest, DetectsCycles) {
  Graph c = cycle_graph(5);
  EXPECT_FALSE(verify_forest_classes(make_edge_colouring(c, {0, 0, 0, 0, 0})).ok);
  EXPECT_TRUE(verify_forest_classes(make_edge_colouring(c, {0, 0, 0, 0, 1})).ok);
  EXPECT_TRUE(is_forest(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}}));
}

TEST(IsSidon, Examples) {
  std::vector<std::uint64_t> s013{0, 1, 3};
  EXPECT_TRUE(is_sidon(s013, 7));
  std::vector<std::uint64_t> s012{0, 1, 2};
  EXPECT_FALSE(is_sidon(s012, 8));
  std::vector<std::uint64_t> one{5};
  EXPECT_TRUE(is_sidon(one, 9));
  EXPECT_TRUE(is_sidon({}, 9));
}

TEST(IsSidon, AgreesWithDefinition) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t m = 1 + rng.below(30);
    std::vector<std::uint64_t> s(rng.below(6));
    for (auto& x : s) x = rng.below(m);
    ASSERT_EQ(is_sidon(s, m), oracle::sidon_by_definition(s, m)) << "m=" << m;
  }
}
