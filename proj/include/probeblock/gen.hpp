#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "probeblock/decomposition.hpp"
#include "probeblock/graph.hpp"
#include "probeblock/probe.hpp"

namespace probeblock {

struct GenSpec {
  Vertex n = 1;
  std::uint64_t seed = 0;
  Vertex min_block = 2;          // clique size range per block
  Vertex max_block = 5;
  double blocks_per_cut = 2.0;   // expected blocks hung at one cut vertex
  double draft_fraction = 0.5;   // per-block chance a vertex is drafted (plant)
  double both_fraction = 0.1;    // drafted vertex lands in N1 and N2 (plant, k = 2)
};

/// Reproducible random source. The engine is std::mt19937_64 (its output
/// sequence is fixed by the C++ standard); the distributions below are
/// written out rather than taken from <random>, whose algorithms vary
/// between standard libraries.
///   uniform(lo, hi): rejection sampling on the raw 64-bit output,
///                    lo + x % r with x below the largest multiple of r.
///   real():          top 53 bits scaled by 2^-53, in [0, 1).
///   bernoulli(p):    real() < p.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t r = hi - lo + 1;
    if (r == 0) return next();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % r;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + x % r;
  }

  double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline void check_spec(const GenSpec& s) {
  if (s.n < 1) throw DomainError("GenSpec.n must be at least 1");
  if (s.min_block < 2 || s.max_block < s.min_block) throw DomainError("GenSpec block sizes need 2 <= min <= max");
  if (!(s.blocks_per_cut >= 1.0)) throw DomainError("GenSpec.blocks_per_cut must be at least 1");
  if (!(s.draft_fraction >= 0 && s.draft_fraction <= 1) || !(s.both_fraction >= 0 && s.both_fraction <= 1)) {
    throw DomainError("GenSpec fractions must lie in [0, 1]");
  }
}

/// Blocks of a random tree of cliques over a random labelling.
inline std::vector<VertexSet> random_clique_tree(const GenSpec& spec, Rng& rng) {
  check_spec(spec);
  std::vector<VertexSet> blocks;
  if (spec.n == 1) return {{0}};
  Vertex placed = 1;
  Vertex anchor = 0;
  const double repick = 1.0 / spec.blocks_per_cut;
  while (placed < spec.n) {
    if (!blocks.empty() && rng.bernoulli(repick)) anchor = static_cast<Vertex>(rng.uniform(0, static_cast<std::uint64_t>(placed) - 1));
    const auto size = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(spec.min_block),
                                                      static_cast<std::uint64_t>(spec.max_block)));
    const Vertex fresh = std::min(size - 1, spec.n - placed);
    VertexSet b{anchor};
    for (Vertex i = 0; i < fresh; ++i) b.push_back(placed + i);
    placed += fresh;
    blocks.push_back(std::move(b));
  }
  std::vector<Vertex> label(static_cast<std::size_t>(spec.n));
  for (Vertex v = 0; v < spec.n; ++v) label[static_cast<std::size_t>(v)] = v;
  rng.shuffle(label);
  for (auto& b : blocks) {
    for (Vertex& v : b) v = label[static_cast<std::size_t>(v)];
    std::sort(b.begin(), b.end());
  }
  return blocks;
}

inline std::vector<Edge> clique_edges(const std::vector<VertexSet>& blocks) {
  std::vector<Edge> edges;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) edges.emplace_back(b[i], b[j]);
  return edges;
}

}  // namespace detail

/// A tree of cliques: blocks of random size in [min_block, max_block] hung
/// one after another at an anchor vertex, with the anchor re-drawn among the
/// placed vertices with probability 1 / blocks_per_cut; vertices are then
/// relabelled by a random permutation.
inline Graph random_block_graph(const GenSpec& spec) {
  Rng rng(spec.seed);
  return Graph(spec.n, detail::clique_edges(detail::random_clique_tree(spec, rng)));
}

struct PlantedInstance {
  Graph graph;
  ProbePartition partition;
  Graph embedding;  // the block graph the instance was cut from
};

/// Deletes every edge of `embedding` inside s1 and every edge inside s2.
inline PlantedInstance plant_from(const Graph& embedding, const VertexSet& s1, const VertexSet& s2) {
  VertexSet a = normalized(s1);
  VertexSet b = normalized(s2);
  check_vertices(embedding, a);
  check_vertices(embedding, b);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(embedding.order()), 0);
  for (Vertex v : a) mask[static_cast<std::size_t>(v)] |= 1;
  for (Vertex v : b) mask[static_cast<std::size_t>(v)] |= 2;
  std::vector<Edge> kept;
  for (const Edge& e : embedding.edges())
    if ((mask[static_cast<std::size_t>(e.u)] & mask[static_cast<std::size_t>(e.v)]) == 0) kept.push_back(e);
  return {Graph(embedding.order(), std::move(kept)), {std::move(a), std::move(b)}, embedding};
}

/// Planted k-probe block graph (k in {1, 2}). Each vertex of each block is
/// drafted with probability draft_fraction; for k = 2 a drafted vertex goes
/// to N1 or N2 with equal odds, or to both with probability both_fraction.
inline PlantedInstance plant(int k, const GenSpec& spec) {
  if (k != 1 && k != 2) throw DomainError("plant supports k = 1 or 2");
  Rng rng(spec.seed);
  const auto blocks = detail::random_clique_tree(spec, rng);
  Graph embedding(spec.n, detail::clique_edges(blocks));
  VertexSet s1, s2;
  for (const auto& b : blocks) {
    for (Vertex v : b) {
      if (!rng.bernoulli(spec.draft_fraction)) continue;
      if (k == 1) {
        s1.push_back(v);
      } else if (rng.bernoulli(spec.both_fraction)) {
        s1.push_back(v);
        s2.push_back(v);
      } else {
        (rng.bernoulli(0.5) ? s1 : s2).push_back(v);
      }
    }
  }
  return plant_from(embedding, s1, s2);
}

/// G(n, p): each pair {u, v}, u < v in lexicographic order, is an edge with
/// probability p.
inline Graph random_graph(Vertex n, double p, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_graph: negative order");
  if (!(p >= 0 && p <= 1)) throw DomainError("random_graph: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace probeblock
