#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <numeric>
#include <span>
#include <vector>

#include "probeblock/graph.hpp"

namespace probeblock {

/// Blocks and cut vertices of a graph.
///
/// Blocks are maximal 2-connected subgraphs, bridges, or isolated vertices.
/// They are ordered by smallest vertex id, then size, then lexicographically,
/// and each block's vertex list is ascending.
struct BlockDecomposition {
  // Vertices of block b: block_vertices[block_offsets[b] .. block_offsets[b+1]).
  std::vector<std::size_t> block_offsets{0};
  std::vector<Vertex> block_vertices;
  VertexSet cut_vertices;
  std::vector<std::uint32_t> block_of_edge;  // indexed by edge id

  // Block-cut incidence: blocks containing each vertex, ascending.
  std::vector<std::size_t> vertex_block_offsets;
  std::vector<std::uint32_t> vertex_blocks;

  // Edge ids of each block, grouped.
  std::vector<std::size_t> block_edge_offsets;
  std::vector<std::uint32_t> block_edges;

  std::size_t block_count() const noexcept { return block_offsets.size() - 1; }

  std::span<const Vertex> block(std::size_t b) const {
    return {block_vertices.data() + block_offsets[b], block_offsets[b + 1] - block_offsets[b]};
  }

  std::span<const std::uint32_t> blocks_of(Vertex v) const {
    const auto b = vertex_block_offsets[static_cast<std::size_t>(v)];
    const auto e = vertex_block_offsets[static_cast<std::size_t>(v) + 1];
    return {vertex_blocks.data() + b, e - b};
  }

  std::span<const std::uint32_t> edges_of(std::size_t block) const {
    const auto b = block_edge_offsets[block];
    const auto e = block_edge_offsets[block + 1];
    return {block_edges.data() + b, e - b};
  }

  bool is_cut_vertex(Vertex v) const { return blocks_of(v).size() >= 2; }

  /// True when the block induces a clique.
  bool is_clique_block(std::size_t block) const {
    const std::size_t k = block_offsets[block + 1] - block_offsets[block];
    return edges_of(block).size() == k * (k - 1) / 2;
  }
};

/// Distance, in elements, of the software prefetches in scans that index
/// per-vertex arrays through a vertex or edge list.
inline constexpr std::size_t kLookahead = 16;

/// Iterative Hopcroft-Tarjan biconnected components in O(n + m).
///
/// Uses a vertex stack: when a tree edge (p, c) closes a block, the vertices
/// above c on the stack plus p form it. Every other edge then belongs to the
/// block in which its deeper endpoint was popped.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t m = g.size();
  constexpr std::uint32_t kNone = UINT32_MAX;

  struct Times {
    std::int32_t disc = -1;
    std::int32_t low = 0;
    std::uint32_t popped_in = kNone;  // raw block in which the vertex left the stack
  };
  std::vector<Times> t(n);
  std::vector<Vertex> vertex_stack;

  // Raw blocks, flattened: vertices of raw block i are flat[start[i]..start[i+1]).
  std::vector<Vertex> flat;
  flat.reserve(2 * n);
  std::vector<std::size_t> start{0};

  struct Frame {
    Vertex v;
    Vertex parent;
    const Vertex* nb;
    std::uint32_t next;
    std::uint32_t degree;
  };
  std::vector<Frame> stack;
  auto frame = [&](Vertex v, Vertex parent) {
    const auto nb = g.neighbors(v);
    // Neighbors are visited soon and their records sit at random addresses;
    // requesting them together overlaps the misses.
    for (Vertex x : nb) {
      __builtin_prefetch(&t[static_cast<std::size_t>(x)]);
      g.prefetch(x);
    }
    return Frame{v, parent, nb.data(), 0, static_cast<std::uint32_t>(nb.size())};
  };
  std::int32_t clock = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (t[root].disc >= 0) continue;
    const Vertex r = static_cast<Vertex>(root);
    t[root].disc = t[root].low = clock++;
    if (g.degree(r) == 0) {
      flat.push_back(r);
      start.push_back(flat.size());
      continue;
    }
    stack.push_back(frame(r, -1));
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.degree) {
        const Vertex w = f.nb[f.next++];
        if (w == f.parent) continue;  // simple graph: the tree edge back up
        Times& tw = t[static_cast<std::size_t>(w)];
        if (tw.disc < 0) {
          tw.disc = tw.low = clock++;
          vertex_stack.push_back(w);
          stack.push_back(frame(w, f.v));
        } else {
          Times& tv = t[static_cast<std::size_t>(f.v)];
          tv.low = std::min(tv.low, tw.disc);
        }
        continue;
      }
      const Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      Times& tp = t[static_cast<std::size_t>(parent)];
      const Times& tc = t[static_cast<std::size_t>(child)];
      tp.low = std::min(tp.low, tc.low);
      if (tc.low >= tp.disc) {
        const auto id = static_cast<std::uint32_t>(start.size() - 1);
        const std::size_t first = flat.size();
        Vertex x;
        do {
          x = vertex_stack.back();
          vertex_stack.pop_back();
          t[static_cast<std::size_t>(x)].popped_in = id;
          flat.push_back(x);
        } while (x != child);
        flat.push_back(parent);
        std::sort(flat.begin() + static_cast<std::ptrdiff_t>(first), flat.end());
        start.push_back(flat.size());
      }
    }
  }

  std::vector<std::uint32_t> raw_block_of_edge(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (e + kLookahead < m) __builtin_prefetch(&t[static_cast<std::size_t>(g.edges()[e + kLookahead].v)]);
    const Edge& edge = g.edges()[e];
    const auto u = static_cast<std::size_t>(edge.u);
    const auto v = static_cast<std::size_t>(edge.v);
    raw_block_of_edge[e] = t[u].disc > t[v].disc ? t[u].popped_in : t[v].popped_in;
  }

  // Canonical block order: smallest vertex, size, then lexicographic.
  // Counting sort on the smallest vertex; ties are blocks sharing it.
  const std::size_t nb = start.size() - 1;
  std::vector<std::uint32_t> perm(nb);
  {
    std::vector<std::size_t> bucket(n + 1, 0);
    for (std::size_t i = 0; i < nb; ++i) ++bucket[static_cast<std::size_t>(flat[start[i]]) + 1];
    std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
    std::vector<std::size_t> pos(bucket.begin(), bucket.end() - 1);
    for (std::size_t i = 0; i < nb; ++i) perm[pos[static_cast<std::size_t>(flat[start[i]])]++] = static_cast<std::uint32_t>(i);
    auto less = [&](std::uint32_t a, std::uint32_t b) {
      const auto sa = start[a + 1] - start[a];
      const auto sb = start[b + 1] - start[b];
      if (sa != sb) return sa < sb;
      return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(start[a]),
                                          flat.begin() + static_cast<std::ptrdiff_t>(start[a + 1]),
                                          flat.begin() + static_cast<std::ptrdiff_t>(start[b]),
                                          flat.begin() + static_cast<std::ptrdiff_t>(start[b + 1]));
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (bucket[v + 1] - bucket[v] > 1) {
        std::sort(perm.begin() + static_cast<std::ptrdiff_t>(bucket[v]),
                  perm.begin() + static_cast<std::ptrdiff_t>(bucket[v + 1]), less);
      }
    }
  }
  std::vector<std::uint32_t> rank(nb);
  for (std::uint32_t i = 0; i < nb; ++i) rank[perm[i]] = i;

  BlockDecomposition bd;
  bd.block_offsets.resize(nb + 1);
  bd.block_vertices.reserve(flat.size());
  for (std::uint32_t i = 0; i < nb; ++i) {
    const auto raw = perm[i];
    bd.block_vertices.insert(bd.block_vertices.end(), flat.begin() + static_cast<std::ptrdiff_t>(start[raw]),
                             flat.begin() + static_cast<std::ptrdiff_t>(start[raw + 1]));
    bd.block_offsets[i + 1] = bd.block_vertices.size();
  }
  bd.block_of_edge.resize(m);
  for (std::size_t e = 0; e < m; ++e) bd.block_of_edge[e] = rank[raw_block_of_edge[e]];

  bd.vertex_block_offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i + kLookahead < flat.size()) __builtin_prefetch(&bd.vertex_block_offsets[static_cast<std::size_t>(flat[i + kLookahead]) + 1]);
    ++bd.vertex_block_offsets[static_cast<std::size_t>(flat[i]) + 1];
  }
  std::partial_sum(bd.vertex_block_offsets.begin(), bd.vertex_block_offsets.end(),
                   bd.vertex_block_offsets.begin());
  bd.vertex_blocks.resize(bd.vertex_block_offsets.back());
  {
    std::vector<std::size_t> pos(bd.vertex_block_offsets.begin(), bd.vertex_block_offsets.end() - 1);
    const auto& bv = bd.block_vertices;
    std::size_t b = 0;
    for (std::size_t i = 0; i < bv.size(); ++i) {
      if (i + kLookahead < bv.size()) __builtin_prefetch(&pos[static_cast<std::size_t>(bv[i + kLookahead])]);
      while (bd.block_offsets[b + 1] <= i) ++b;
      bd.vertex_blocks[pos[static_cast<std::size_t>(bv[i])]++] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (bd.vertex_block_offsets[v + 1] - bd.vertex_block_offsets[v] >= 2) {
      bd.cut_vertices.push_back(static_cast<Vertex>(v));
    }
  }

  bd.block_edge_offsets.assign(nb + 1, 0);
  for (std::size_t e = 0; e < m; ++e) ++bd.block_edge_offsets[bd.block_of_edge[e] + 1];
  std::partial_sum(bd.block_edge_offsets.begin(), bd.block_edge_offsets.end(),
                   bd.block_edge_offsets.begin());
  bd.block_edges.resize(m);
  {
    std::vector<std::size_t> pos(bd.block_edge_offsets.begin(), bd.block_edge_offsets.end() - 1);
    for (std::size_t e = 0; e < m; ++e) bd.block_edges[pos[bd.block_of_edge[e]]++] = static_cast<std::uint32_t>(e);
  }
  return bd;
}

namespace detail {

/// Set of small integers with O(log_64 n) insert, erase and minimum: one
/// bit per element plus summary levels marking nonzero words.
class MinBitset {
 public:
  explicit MinBitset(std::size_t n) {
    std::size_t words = (n + 63) / 64;
    do {
      levels_.emplace_back(std::max<std::size_t>(words, 1), 0);
      words = (words + 63) / 64;
    } while (levels_.back().size() > 1);
  }

  void insert(std::size_t i) {
    for (auto& level : levels_) {
      const bool was_empty = level[i / 64] == 0;
      level[i / 64] |= std::uint64_t{1} << (i % 64);
      if (!was_empty) return;
      i /= 64;
    }
  }

  void erase(std::size_t i) {
    for (auto& level : levels_) {
      level[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (level[i / 64] != 0) return;
      i /= 64;
    }
  }

  bool empty() const { return levels_.back()[0] == 0; }

  std::size_t min() const {
    std::size_t i = 0;
    for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
      i = i * 64 + static_cast<std::size_t>(std::countr_zero((*level)[i]));
    }
    return i;
  }

 private:
  std::vector<std::vector<std::uint64_t>> levels_;
};

}  // namespace detail

struct PeelStep {
  std::size_t block;
  std::optional<Vertex> cut_vertex;  // empty for the last block of a component

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// End-block elimination order. Each step removes a block that has at most
/// one cut vertex in what remains; among eligible blocks the lowest index
/// goes first. Reversing the order gives a root-first traversal in which
/// every block meets the already visited part in exactly its cut vertex.
inline std::vector<PeelStep> peel_order(const BlockDecomposition& bd) {
  const std::size_t nb = bd.block_count();
  const std::size_t n = bd.vertex_block_offsets.empty() ? 0 : bd.vertex_block_offsets.size() - 1;
  std::vector<std::uint32_t> alive_blocks(n, 0);  // remaining blocks per vertex
  for (std::size_t v = 0; v < n; ++v) {
    alive_blocks[v] = static_cast<std::uint32_t>(bd.vertex_block_offsets[v + 1] - bd.vertex_block_offsets[v]);
  }
  std::vector<std::uint32_t> cut_count(nb, 0);  // residual cut vertices per block
  for (std::size_t b = 0, i = 0; i < bd.block_vertices.size(); ++i) {
    const auto& bv = bd.block_vertices;
    if (i + kLookahead < bv.size()) __builtin_prefetch(&alive_blocks[static_cast<std::size_t>(bv[i + kLookahead])]);
    while (bd.block_offsets[b + 1] <= i) ++b;
    if (alive_blocks[static_cast<std::size_t>(bv[i])] >= 2) ++cut_count[b];
  }

  std::vector<char> removed(nb, 0);
  detail::MinBitset ready(nb);
  for (std::size_t b = 0; b < nb; ++b)
    if (cut_count[b] <= 1) ready.insert(b);

  std::vector<PeelStep> order;
  order.reserve(nb);
  while (!ready.empty()) {
    const std::size_t b = ready.min();
    ready.erase(b);
    removed[b] = 1;
    PeelStep step{b, std::nullopt};
    for (Vertex v : bd.block(b)) {
      auto& alive = alive_blocks[static_cast<std::size_t>(v)];
      if (alive >= 2) step.cut_vertex = v;
      --alive;
      if (alive == 1) {
        // v stops being a cut vertex of its one remaining block.
        for (std::uint32_t other : bd.blocks_of(v)) {
          if (!removed[other]) {
            if (--cut_count[other] == 1) ready.insert(other);
            break;
          }
        }
      }
    }
    order.push_back(step);
  }
  return order;
}

}  // namespace probeblock
