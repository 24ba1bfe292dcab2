#include <gtest/gtest.h>

#include "brute.hpp"
#include "probeblock/io.hpp"
#include "probeblock/gen.hpp"
#include "probeblock/patterns.hpp"
#include "probeblock/structure.hpp"

using namespace probeblock;

namespace {

// Vertex 0, 1 adjacent to everything; 2, 3 the missing pair.
Graph diamond_cd() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph two_triangles() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph random_tree(Vertex n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(rng.uniform(0, static_cast<std::uint64_t>(v) - 1)));
  return Graph(n, std::move(edges));
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t l = cycle.size();
  if (l < 4 || normalized(cycle).size() != l) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == l - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
  for (Vertex v : order) {
    VertexSet later;
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    if (!is_clique(g, later)) return false;
  }
  return true;
}

template <class F>
void for_all_graphs(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t idx = 0; idx < count; ++idx) f(brute::graph_from_index(n, idx));
  }
}

}  // namespace

TEST(UniversalSet, Examples) {
  EXPECT_EQ(universal_set(complete_graph(4)), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(universal_set(cycle_graph(4)).empty());
  EXPECT_EQ(universal_set(patterns::gem()), (VertexSet{4}));
}

TEST(CompleteSplit, Star) {
  const auto r = complete_split(star_graph(3));
  ASSERT_TRUE(std::holds_alternative<SplitPartition>(r));
  EXPECT_EQ(std::get<SplitPartition>(r).clique, (VertexSet{0}));
  EXPECT_EQ(std::get<SplitPartition>(r).independent, (VertexSet{1, 2, 3}));
}

TEST(CompleteSplit, Failures) {
  EXPECT_TRUE(std::holds_alternative<Edge>(complete_split(cycle_graph(4))));
  const auto r = complete_split(disjoint_union(complete_graph(2), Graph(1)));
  ASSERT_TRUE(std::holds_alternative<Edge>(r));
  EXPECT_EQ(std::get<Edge>(r), Edge(0, 1));
}

TEST(Kxyz, C4) {
  const auto r = kxyz(cycle_graph(4));
  ASSERT_TRUE(std::holds_alternative<KxyzPartition>(r));
  EXPECT_EQ(std::get<KxyzPartition>(r), (KxyzPartition{{}, {0, 2}, {1, 3}, {}}));
}

TEST(Kxyz, P4Fails) {
  const auto r = kxyz(path_graph(4));
  ASSERT_TRUE(std::holds_alternative<KxyzFailure>(r));
  EXPECT_EQ(std::get<KxyzFailure>(r).kind, KxyzFailure::Kind::missing_cross_edge);
}

TEST(Kxyz, Diamond) {
  const auto r = kxyz(diamond_cd());
  ASSERT_TRUE(std::holds_alternative<KxyzPartition>(r));
  EXPECT_EQ(std::get<KxyzPartition>(r), (KxyzPartition{{0, 1}, {}, {}, {2, 3}}));
}

TEST(Kxyz, FailureWitnesses) {
  const auto two = kxyz(disjoint_union(complete_graph(2), complete_graph(2)));
  ASSERT_TRUE(std::holds_alternative<KxyzFailure>(two));
  EXPECT_EQ(std::get<KxyzFailure>(two).kind, KxyzFailure::Kind::two_components);
  const auto odd = kxyz(disjoint_union(complete_graph(3), Graph(1)));
  ASSERT_TRUE(std::holds_alternative<KxyzFailure>(odd));
  const auto& w = std::get<KxyzFailure>(odd);
  EXPECT_EQ(w.kind, KxyzFailure::Kind::odd_cycle);
  EXPECT_EQ(normalized(w.witness), (VertexSet{0, 1, 2}));
}

TEST(Kxyz, SuccessSatisfiesDefinition) {
  for_all_graphs(6, [](const Graph& g) {
    const auto r = kxyz(g);
    if (!std::holds_alternative<KxyzPartition>(r)) return;
    const auto& p = std::get<KxyzPartition>(r);
    ASSERT_EQ(p.k, universal_set(g));
    ASSERT_TRUE(is_independent(g, set_union(p.x, p.z)));
    ASSERT_TRUE(is_independent(g, set_union(p.y, p.z)));
    for (Vertex x : p.x)
      for (Vertex y : p.y) ASSERT_TRUE(g.has_edge(x, y));
    ASSERT_EQ(p.k.size() + p.x.size() + p.y.size() + p.z.size(), static_cast<std::size_t>(g.order()));
    if (!p.x.empty()) {
      ASSERT_LT(p.x.front(), p.y.front());
    } else {
      ASSERT_TRUE(p.y.empty());
      ASSERT_TRUE(std::holds_alternative<SplitPartition>(complete_split(g)));
    }
  });
}

TEST(Kxyz, EquivalentToFivePatternFreeness) {
  const std::vector<Graph> five = {pattern("P4"), pattern("2K2"), pattern("K3+K1"), pattern("B1"), pattern("B3")};
  for_all_graphs(7, [&](const Graph& g) {
    const bool ok = std::holds_alternative<KxyzPartition>(kxyz(g));
    bool free = true;
    for (const Graph& p : five) free = free && !brute::contains_induced(g, p);
    ASSERT_EQ(ok, free) << to_edge_list(g);
  });
}

TEST(CompleteSplit, EquivalentToPatternFreeness) {
  const Graph k2k1 = pattern("K2+K1"), c4 = pattern("C4");
  for_all_graphs(7, [&](const Graph& g) {
    const bool ok = std::holds_alternative<SplitPartition>(complete_split(g));
    ASSERT_EQ(ok, !brute::contains_induced(g, k2k1) && !brute::contains_induced(g, c4)) << to_edge_list(g);
  });
}

TEST(BlockGraph, Examples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(is_block_graph(random_tree(12, seed)).is_block_graph);
  const auto d = is_block_graph(diamond_cd());
  EXPECT_FALSE(d.is_block_graph);
  EXPECT_EQ(d.witness, Edge(2, 3));
  EXPECT_TRUE(is_block_graph(two_triangles()).is_block_graph);
}

TEST(BlockGraph, EquivalentToDiamondFreeChordal) {
  const Graph diamond = pattern("diamond");
  for_all_graphs(7, [&](const Graph& g) {
    const bool lhs = is_block_graph(g).is_block_graph;
    ASSERT_EQ(lhs, is_chordal(g).chordal && !brute::contains_induced(g, diamond)) << to_edge_list(g);
    ASSERT_EQ(lhs, brute::is_block_graph(g));
  });
  for (std::uint64_t seed = 0; seed < 20000; ++seed) {
    const Graph g = random_graph(8, 0.2 + 0.15 * static_cast<double>(seed % 4), seed);
    ASSERT_EQ(is_block_graph(g).is_block_graph, is_chordal(g).chordal && !brute::contains_induced(g, diamond));
  }
}

TEST(Chordal, Examples) {
  const auto c4 = is_chordal(cycle_graph(4));
  EXPECT_FALSE(c4.chordal);
  EXPECT_TRUE(is_hole(cycle_graph(4), c4.hole));
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(is_chordal(random_tree(10, seed)).chordal);
  EXPECT_TRUE(is_chordal(two_triangles()).chordal);
}

TEST(Chordal, CertificatesAreValid) {
  for_all_graphs(6, [](const Graph& g) {
    const auto c = is_chordal(g);
    if (c.chordal) {
      ASSERT_EQ(c.elimination_order.size(), static_cast<std::size_t>(g.order()));
      ASSERT_TRUE(is_perfect_elimination_order(g, c.elimination_order));
    } else {
      ASSERT_TRUE(is_hole(g, c.hole)) << to_edge_list(g);
    }
  });
}

TEST(DistanceHereditary, Examples) {
  EXPECT_FALSE(is_distance_hereditary(pattern("house")));
  EXPECT_TRUE(is_distance_hereditary(cycle_graph(4)));
  EXPECT_FALSE(is_distance_hereditary(cycle_graph(5)));
}

TEST(DistanceHereditary, EquivalentToPatternFreeness) {
  auto pattern_free = [](const Graph& g) {
    for (const char* name : {"house", "domino", "gem"})
      if (brute::contains_induced(g, pattern(name))) return false;
    for (Vertex l = 5; l <= g.order(); ++l)
      if (brute::contains_induced(g, cycle_graph(l))) return false;
    return true;
  };
  for_all_graphs(7, [&](const Graph& g) { ASSERT_EQ(is_distance_hereditary(g), pattern_free(g)) << to_edge_list(g); });
  for (std::uint64_t seed = 0; seed < 5000; ++seed) {
    const Graph g = random_graph(8, 0.25 + 0.1 * static_cast<double>(seed % 5), seed);
    ASSERT_EQ(is_distance_hereditary(g), pattern_free(g)) << to_edge_list(g);
  }
}

TEST(Ptolemaic, Examples) {
  EXPECT_FALSE(is_ptolemaic(patterns::gem()));
  EXPECT_FALSE(is_ptolemaic(cycle_graph(4)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_TRUE(is_ptolemaic(random_block_graph(GenSpec{.n = 25, .seed = seed})));
  }
}

TEST(Ptolemaic, CoincidesWithC4FreeDistanceHereditary) {
  const Graph c4 = cycle_graph(4);
  for_all_graphs(6, [&](const Graph& g) {
    ASSERT_EQ(is_ptolemaic(g), is_distance_hereditary(g) && !brute::contains_induced(g, c4)) << to_edge_list(g);
  });
}
