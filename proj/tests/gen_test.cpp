#include <gtest/gtest.h>

#include "brute.hpp"
#include "probeblock/gen.hpp"
#include "probeblock/patterns.hpp"
#include "probeblock/structure.hpp"

using namespace probeblock;

TEST(Rng, Mt19937ReferenceValue) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ull);
  Rng a(5489), b(5489);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.uniform(3, 9);
    ASSERT_GE(x, 3u);
    ASSERT_LE(x, 9u);
    ++hits[static_cast<std::size_t>(x - 3)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform(4, 4), 4u);
  for (int i = 0; i < 1000; ++i) {
    const double r = rng.real();
    ASSERT_GE(r, 0.0);
    ASSERT_LT(r, 1.0);
  }
}

TEST(RandomBlockGraph, Examples) {
  EXPECT_EQ(random_block_graph(GenSpec{.n = 1}), Graph(1));
  EXPECT_EQ(random_block_graph(GenSpec{.n = 3, .min_block = 3, .max_block = 3}), complete_graph(3));
}

TEST(RandomBlockGraph, IsChordalDiamondFreeBlockGraph) {
  const Graph diamond = pattern("diamond");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenSpec spec{.n = static_cast<Vertex>(1 + seed % 12), .seed = seed, .max_block = static_cast<Vertex>(2 + seed % 5)};
    const Graph g = random_block_graph(spec);
    EXPECT_EQ(g.order(), spec.n);
    EXPECT_TRUE(is_block_graph(g).is_block_graph);
    EXPECT_TRUE(is_chordal(g).chordal);
    EXPECT_FALSE(brute::contains_induced(g, diamond));
  }
}

TEST(RandomBlockGraph, ConnectedAndDeterministic) {
  const GenSpec spec{.n = 500, .seed = 42, .blocks_per_cut = 3.0};
  const Graph a = random_block_graph(spec);
  EXPECT_EQ(a, random_block_graph(spec));
  EXPECT_NE(a, random_block_graph(GenSpec{.n = 500, .seed = 43, .blocks_per_cut = 3.0}));
  const auto bd = block_decomposition(a);
  std::size_t roots = 0;
  for (const auto& s : peel_order(bd)) roots += !s.cut_vertex;
  EXPECT_EQ(roots, 1u);
}

TEST(GenSpec, Validation) {
  EXPECT_THROW(random_block_graph(GenSpec{.n = 0}), DomainError);
  EXPECT_THROW(random_block_graph(GenSpec{.n = 5, .min_block = 1}), DomainError);
  EXPECT_THROW(random_block_graph(GenSpec{.n = 5, .min_block = 4, .max_block = 3}), DomainError);
  EXPECT_THROW(random_block_graph(GenSpec{.n = 5, .blocks_per_cut = 0.5}), DomainError);
  EXPECT_THROW(plant(2, GenSpec{.n = 5, .draft_fraction = 1.5}), DomainError);
  EXPECT_THROW(plant(3, GenSpec{.n = 5}), DomainError);
}

TEST(Plant, Examples) {
  const Graph k4 = complete_graph(4);
  const auto none = plant_from(k4, {}, {});
  EXPECT_EQ(none.graph, k4);
  EXPECT_EQ(none.partition, (ProbePartition{{}, {}}));
  const auto d = plant_from(k4, {2, 3}, {});
  EXPECT_EQ(d.graph, Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(d.partition, (ProbePartition{{2, 3}, {}}));
  const auto zero = plant(2, GenSpec{.n = 30, .seed = 1, .draft_fraction = 0.0});
  EXPECT_EQ(zero.graph, zero.embedding);
  EXPECT_EQ(zero.partition, (ProbePartition{{}, {}}));
}

TEST(Plant, PartitionVerifiesAndReproduces) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (int k : {1, 2}) {
      const GenSpec spec{.n = static_cast<Vertex>(1 + seed % 60), .seed = seed};
      const auto inst = plant(k, spec);
      EXPECT_TRUE(is_block_graph(inst.embedding).is_block_graph);
      EXPECT_TRUE(verify_partitioned(inst.graph, inst.partition, Target::block).accepted());
      if (k == 1) {
        EXPECT_TRUE(inst.partition.n2.empty());
      }
      const auto again = plant(k, spec);
      EXPECT_EQ(again.graph, inst.graph);
      EXPECT_EQ(again.partition, inst.partition);
    }
  }
}

TEST(Plant, RecognizerAcceptsPlantedInstances) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GenSpec spec{.n = static_cast<Vertex>(5 + seed % 200), .seed = seed};
    ASSERT_TRUE(recognize_2probe_block(plant(2, spec).graph).accepted()) << seed;
    const auto one = recognize_2probe_block(plant(1, spec).graph);
    ASSERT_TRUE(one.accepted()) << seed;
    ASSERT_TRUE(one.certificate->partition.n2.empty()) << seed;
  }
}

TEST(RandomGraph, Examples) {
  EXPECT_EQ(random_graph(6, 0.0, 1).size(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, 1), complete_graph(6));
  EXPECT_EQ(random_graph(20, 0.3, 9), random_graph(20, 0.3, 9));
  EXPECT_THROW(random_graph(5, 1.5, 0), DomainError);
}
