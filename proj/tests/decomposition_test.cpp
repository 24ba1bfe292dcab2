#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "probeblock/decomposition.hpp"
#include "probeblock/gen.hpp"
#include "probeblock/io.hpp"

using namespace probeblock;

namespace {

std::vector<VertexSet> blocks_of(const BlockDecomposition& bd) {
  std::vector<VertexSet> out;
  for (std::size_t b = 0; b < bd.block_count(); ++b) out.emplace_back(bd.block(b).begin(), bd.block(b).end());
  return out;
}

Graph two_triangles() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

int components(const brute::Matrix& m, int skip) {
  std::vector<char> seen(static_cast<std::size_t>(m.n), 0);
  int count = 0;
  for (int s = 0; s < m.n; ++s) {
    if (s == skip || seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m.n; ++y) {
        if (y != skip && !seen[static_cast<std::size_t>(y)] && m(x, y)) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(BlockDecomposition, TwoTrianglesSharingAVertex) {
  const auto bd = block_decomposition(two_triangles());
  EXPECT_EQ(blocks_of(bd), (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(bd.cut_vertices, (VertexSet{2}));
}

TEST(BlockDecomposition, CycleIsOneBlock) {
  const auto bd = block_decomposition(cycle_graph(4));
  EXPECT_EQ(bd.block_count(), 1u);
  EXPECT_TRUE(bd.cut_vertices.empty());
}

TEST(BlockDecomposition, PathP3) {
  const auto bd = block_decomposition(path_graph(3));
  EXPECT_EQ(blocks_of(bd), (std::vector<VertexSet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(bd.cut_vertices, (VertexSet{1}));
}

TEST(BlockDecomposition, IsolatedVerticesAreSingletonBlocks) {
  const auto bd = block_decomposition(Graph(3, {{0, 2}}));
  EXPECT_EQ(blocks_of(bd), (std::vector<VertexSet>{{0, 2}, {1}}));
  EXPECT_TRUE(bd.edges_of(1).empty());
  EXPECT_EQ(block_decomposition(Graph(0)).block_count(), 0u);
}

TEST(BlockDecomposition, BlockOrderingBySmallestThenSize) {
  // Vertex 0 sits in a bridge {0,3} and a triangle {0,1,2}: the bridge is smaller.
  const auto bd = block_decomposition(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
  EXPECT_EQ(blocks_of(bd), (std::vector<VertexSet>{{0, 3}, {0, 1, 2}}));
}

TEST(BlockDecomposition, MatchesNaiveBlocksOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const Graph g = random_graph(static_cast<Vertex>(1 + seed % 8), 0.15 + 0.1 * static_cast<double>(seed % 5), seed);
    const auto bd = block_decomposition(g);
    auto mine = blocks_of(bd);
    std::sort(mine.begin(), mine.end());
    ASSERT_EQ(mine, brute::blocks(g)) << to_edge_list(g);
  }
}

TEST(BlockDecomposition, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = random_graph(static_cast<Vertex>(2 + seed % 9), 0.3, seed);
    const auto bd = block_decomposition(g);
    ASSERT_EQ(bd.block_of_edge.size(), g.size());
    std::size_t edge_total = 0;
    for (std::size_t b = 0; b < bd.block_count(); ++b) {
      edge_total += bd.edges_of(b).size();
      for (std::uint32_t id : bd.edges_of(b)) {
        EXPECT_EQ(bd.block_of_edge[id], b);
        const auto verts = bd.block(b);
        EXPECT_TRUE(std::binary_search(verts.begin(), verts.end(), g.edges()[id].u));
        EXPECT_TRUE(std::binary_search(verts.begin(), verts.end(), g.edges()[id].v));
      }
    }
    EXPECT_EQ(edge_total, g.size());
    for (std::size_t a = 0; a < bd.block_count(); ++a) {
      for (std::size_t b = a + 1; b < bd.block_count(); ++b) {
        VertexSet common;
        std::set_intersection(bd.block(a).begin(), bd.block(a).end(), bd.block(b).begin(), bd.block(b).end(),
                              std::back_inserter(common));
        ASSERT_LE(common.size(), 1u);
        if (!common.empty()) {
          EXPECT_TRUE(bd.is_cut_vertex(common[0]));
        }
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(bd.is_cut_vertex(v), std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v));
    }
  }
}

TEST(BlockDecomposition, BlockCountFormula) {
  // Connected graphs: blocks = 1 + sum over cut vertices of (components after removal - 1).
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 300; ++seed) {
    const Graph g = random_graph(static_cast<Vertex>(2 + seed % 7), 0.35, seed);
    const brute::Matrix m(g);
    if (components(m, -1) != 1) continue;
    ++checked;
    const auto bd = block_decomposition(g);
    std::size_t expected = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      const int split = components(m, v) - 1;
      EXPECT_EQ(split > 0, bd.is_cut_vertex(v));
      expected += static_cast<std::size_t>(split);
    }
    EXPECT_EQ(bd.block_count(), expected);
  }
}

TEST(PeelOrder, SingleBlock) {
  EXPECT_EQ(peel_order(block_decomposition(complete_graph(3))), (std::vector<PeelStep>{{0, std::nullopt}}));
}

TEST(PeelOrder, PathP3) {
  EXPECT_EQ(peel_order(block_decomposition(path_graph(3))), (std::vector<PeelStep>{{0, 1}, {1, std::nullopt}}));
}

TEST(PeelOrder, StarPeelsLeavesAtTheCenter) {
  const auto bd = block_decomposition(star_graph(3));
  const auto order = peel_order(bd);
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0], (PeelStep{0, 0}));
  EXPECT_EQ(order[1], (PeelStep{1, 0}));
  EXPECT_EQ(order[2], (PeelStep{2, std::nullopt}));
}

TEST(PeelOrder, ResidualDecompositionDropsPeeledBlock) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = random_graph(static_cast<Vertex>(1 + seed % 8), 0.3, seed);
    const auto bd = block_decomposition(g);
    const auto order = peel_order(bd);
    ASSERT_EQ(order.size(), bd.block_count());

    std::set<VertexSet> remaining;
    for (const auto& b : blocks_of(bd)) remaining.insert(b);
    for (const PeelStep& step : order) {
      const VertexSet peeled(bd.block(step.block).begin(), bd.block(step.block).end());
      ASSERT_TRUE(remaining.count(peeled));
      remaining.erase(peeled);
      // The residual graph: everything still covered by an unpeeled block.
      VertexSet alive;
      for (const auto& b : remaining) alive.insert(alive.end(), b.begin(), b.end());
      alive = normalized(alive);
      // Peeled vertices other than the cut vertex are gone for good.
      for (Vertex v : peeled) {
        const bool kept = std::binary_search(alive.begin(), alive.end(), v);
        EXPECT_EQ(kept, step.cut_vertex == v) << "seed " << seed;
      }
      std::set<VertexSet> naive;
      for (const VertexSet& local : brute::blocks(induced(g, alive))) {
        VertexSet global;
        for (Vertex v : local) global.push_back(alive[static_cast<std::size_t>(v)]);
        naive.insert(global);
      }
      ASSERT_EQ(naive, remaining) << "seed " << seed;
    }
  }
}

TEST(PeelOrder, LargeRandomBlockGraph) {
  const Graph g = random_block_graph(GenSpec{.n = 20000, .seed = 3});
  const auto bd = block_decomposition(g);
  const auto order = peel_order(bd);
  EXPECT_EQ(order.size(), bd.block_count());
  std::size_t roots = 0;
  for (const auto& s : order) roots += !s.cut_vertex;
  EXPECT_EQ(roots, 1u);
}
