#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "triameter/distance.hpp"
#include "triameter/error.hpp"
#include "triameter/explorer.hpp"
#include "triameter/families.hpp"
#include "triameter/metrics.hpp"

namespace triameter {
namespace {

template <typename Fn>
Errc error_code(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Empty;
}

std::vector<int> leg_lengths(const Graph& tree) {
  std::vector<int> out;
  for (Vertex start : tree.neighbors(0)) {
    int len = 1;
    Vertex prev = 0, cur = start;
    while (tree.degree(cur) == 2) {
      Vertex next = tree.neighbors(cur)[0] == prev ? tree.neighbors(cur)[1] : tree.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

TEST(BuildTest, Examples) {
  auto q3 = build({Family::Hypercube, {3}});
  EXPECT_EQ(q3.order(), 8);
  EXPECT_EQ(q3.size(), 12);
  EXPECT_EQ(diameter(DistanceMatrix::of(q3)).value, 3);

  EXPECT_EQ(triameter_bruteforce(DistanceMatrix::of(build({Family::Star, {3}}))).value, 6);

  auto k23 = build({Family::CompleteBipartite, {2, 3}});
  auto ref = oracle::floyd_warshall(k23);
  ASSERT_EQ(oracle::diameter(ref), 2);
  ASSERT_EQ(oracle::triameter(ref), 6);
  auto dm = DistanceMatrix::of(k23);
  EXPECT_EQ(diameter(dm).value, 2);
  EXPECT_EQ(triameter_bruteforce(dm).value, 6);
}

TEST(BuildTest, Numbering) {
  auto bistar = build({Family::Bistar, {2, 3}});
  EXPECT_EQ(bistar.order(), 7);
  EXPECT_TRUE(bistar.adjacent(0, 1));
  EXPECT_EQ(bistar.degree(0), 3);
  EXPECT_EQ(bistar.degree(1), 4);
  EXPECT_TRUE(bistar.adjacent(1, 6));
  auto cube = build({Family::Hypercube, {4}});
  EXPECT_TRUE(cube.adjacent(0b0101, 0b0111));
  EXPECT_FALSE(cube.adjacent(0b0101, 0b0110));
  EXPECT_EQ(build({Family::Cycle, {5}}).edges().back(), (Edge{3, 4}));
}

TEST(BuildTest, Errors) {
  EXPECT_EQ(error_code([] { build({Family::Bistar, {2}}); }), Errc::BadArity);
  EXPECT_EQ(error_code([] { build({Family::Path, {}}); }), Errc::BadArity);
  EXPECT_EQ(error_code([] { build({Family::Complete, {0}}); }), Errc::SizeZero);
  EXPECT_EQ(error_code([] { build({Family::Cycle, {2}}); }), Errc::BadParams);
  EXPECT_EQ(error_code([] { family_from_string("wheel"); }), Errc::UnknownName);
  EXPECT_EQ(family_from_string("complete_bipartite"), Family::CompleteBipartite);
}

TEST(ExtremalTreeTest, Examples) {
  auto t10 = extremal_tree(10, 4);
  EXPECT_EQ(t10.order(), 10);
  EXPECT_EQ(leg_lengths(t10), (std::vector<int>{3, 2, 2, 2}));

  auto k13 = extremal_tree(4, 3);
  EXPECT_EQ(k13, build({Family::Star, {3}}));

  auto spider = extremal_tree(13, 3);
  EXPECT_EQ(leg_lengths(spider), (std::vector<int>{4, 4, 4}));
  ASSERT_EQ(oracle::triameter(oracle::floyd_warshall(spider)), 24);
  EXPECT_EQ(triameter_bruteforce(DistanceMatrix::of(spider)).value, 24);
}

TEST(ExtremalTreeTest, Errors) {
  EXPECT_EQ(error_code([] { extremal_tree(3, 2); }), Errc::BadParams);
  EXPECT_EQ(error_code([] { extremal_tree(6, 2); }), Errc::BadParams);
  EXPECT_EQ(error_code([] { extremal_tree(6, 6); }), Errc::BadParams);
}

TEST(ExtremalTreeProperty, OrderLeavesAndBalanceOnGrid) {
  for (int n = 4; n <= 32; ++n) {
    for (int l = 3; l <= n - 1; ++l) {
      auto t = extremal_tree(n, l);
      ASSERT_EQ(t.order(), n);
      ASSERT_TRUE(is_tree(t));
      ASSERT_EQ(static_cast<int>(t.leaves().size()), l);
      auto legs = leg_lengths(t);
      ASSERT_LE(*std::max_element(legs.begin(), legs.end()) - *std::min_element(legs.begin(), legs.end()), 1);
      ASSERT_TRUE(std::is_sorted(legs.rbegin(), legs.rend()));
    }
  }
}

TEST(CartesianTest, Examples) {
  auto k2 = build({Family::Complete, {2}});
  auto square = cartesian_product(k2, k2);
  EXPECT_EQ(fingerprint(square), fingerprint(build({Family::Cycle, {4}})));

  auto cube = k2;
  for (int d = 2; d <= 5; ++d) {
    cube = cartesian_product(cube, k2);
    EXPECT_EQ(fingerprint(cube), fingerprint(build({Family::Hypercube, {d}}))) << d;
  }

  auto p3 = build({Family::Path, {3}});
  auto grid = cartesian_product(p3, p3);
  ASSERT_EQ(oracle::triameter(oracle::floyd_warshall(p3)), 4);
  ASSERT_EQ(oracle::triameter(oracle::floyd_warshall(grid)), 8);
  EXPECT_EQ(grid.order(), 9);
  EXPECT_EQ(triameter_bruteforce(DistanceMatrix::of(grid)).value, 8);

}

TEST(CartesianProperty, DistancesAdd) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_connected(1 + trial % 6, 0.3, rng);
    auto h = oracle::random_connected(1 + trial % 5, 0.3, rng);
    auto dg = DistanceMatrix::of(g);
    auto dh = DistanceMatrix::of(h);
    auto dp = DistanceMatrix::of(cartesian_product(g, h));
    const int nh = h.order();
    for (Vertex i = 0; i < g.order(); ++i)
      for (Vertex j = 0; j < nh; ++j)
        for (Vertex i2 = 0; i2 < g.order(); ++i2)
          for (Vertex j2 = 0; j2 < nh; ++j2) ASSERT_EQ(dp(i * nh + j, i2 * nh + j2), dg(i, i2) + dh(j, j2));
  }
}

TEST(FixtureTest, ShapesAndLabels) {
  auto theta = fixture("fig2_theta");
  EXPECT_EQ(theta.graph.order(), 12);
  EXPECT_EQ(theta.graph.size(), 13);
  EXPECT_EQ(theta.at("x"), 0);
  EXPECT_EQ(theta.at("b"), 2);
  EXPECT_EQ(theta.at("a"), 7);
  EXPECT_EQ(theta.at("c"), 10);
  EXPECT_EQ(theta.graph.degree(theta.at("x")), 3);
  EXPECT_EQ(theta.graph.degree(theta.at("m4")), 4);

  auto g = fixture("fig3_G");
  EXPECT_EQ(g.graph.order(), 6);
  EXPECT_EQ(g.graph.size(), 7);
  auto h = fixture("fig3_H");
  EXPECT_EQ(h.graph.size(), 11);
  auto med = fixture("fig4_median");
  EXPECT_EQ(med.graph.size(), 5);
  EXPECT_EQ(error_code([&] { med.at("z"); }), Errc::UnknownName);
  EXPECT_EQ(error_code([] { fixture("fig9"); }), Errc::UnknownFixture);
  EXPECT_EQ(fixture_names().size(), 4U);
}

TEST(FixtureTest, ReportedValues) {
  auto theta = DistanceMatrix::of(fixture("fig2_theta").graph);
  EXPECT_EQ(triameter_bruteforce(theta).value, 12);
  EXPECT_EQ(diameter(theta).value, 5);

  auto med = DistanceMatrix::of(fixture("fig4_median").graph);
  EXPECT_EQ(triameter_bruteforce(med).value, 6);
  EXPECT_EQ(diameter(med).value, 3);

  auto g = fixture("fig3_G");
  auto dg = diameter(DistanceMatrix::of(g.graph));
  EXPECT_EQ(dg.value, 3);
  EXPECT_EQ(dg.pairs, (std::vector<VertexPair>{{g.at("y"), g.at("x")}}));
}

TEST(PrueferTest, KnownSequenceAndRandomTrees) {
  std::vector<Vertex> seq{3, 3, 3, 4};
  EXPECT_EQ(tree_from_pruefer(seq), Graph::from_edge_list(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  std::mt19937_64 rng(77);
  for (int n = 1; n <= 40; ++n) {
    auto t = random_tree(n, rng);
    EXPECT_EQ(t.order(), n);
    EXPECT_TRUE(is_tree(t));
  }
}

} // namespace
} // namespace triameter
