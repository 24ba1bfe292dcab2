#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "probeblock/decomposition.hpp"
#include "probeblock/graph.hpp"
#include "probeblock/induced_search.hpp"
#include "probeblock/patterns.hpp"

namespace probeblock {

/// Vertices adjacent to every other vertex.
inline VertexSet universal_set(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Complete split graphs

/// Clique Q fully joined to independent S. Q holds every universal vertex.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// A complete split partition, or an edge inside the non-universal part.
inline std::variant<SplitPartition, Edge> complete_split(const Graph& g) {
  SplitPartition p;
  p.clique = universal_set(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!set_contains(p.clique, v)) p.independent.push_back(v);
  if (auto e = find_internal_edge(g, p.independent)) return *e;
  return p;
}

// ---------------------------------------------------------------------------
// (K,X,Y,Z)-graphs

/// K: universal vertices. Z: isolated vertices of G - K. X, Y: the sides of
/// the single nontrivial component of G - K, which is complete bipartite.
struct KxyzPartition {
  VertexSet k, x, y, z;

  friend bool operator==(const KxyzPartition&, const KxyzPartition&) = default;
};

struct KxyzFailure {
  enum class Kind { two_components, odd_cycle, missing_cross_edge };
  Kind kind;
  // two_components: one vertex from each of two nontrivial components.
  // odd_cycle: the vertices of an odd cycle, in cycle order.
  // missing_cross_edge: x, y on opposite sides that are not adjacent.
  std::vector<Vertex> witness;
};

inline const char* to_string(KxyzFailure::Kind kind) {
  switch (kind) {
    case KxyzFailure::Kind::two_components: return "two-components";
    case KxyzFailure::Kind::odd_cycle: return "odd-cycle";
    case KxyzFailure::Kind::missing_cross_edge: return "missing-cross-edge";
  }
  return "?";
}

/// Recognizes (K,X,Y,Z)-graphs in O(n + m). X is the side holding the
/// smallest vertex id of the nontrivial component.
inline std::variant<KxyzPartition, KxyzFailure> kxyz(const Graph& g) {
  const Vertex n = g.order();
  KxyzPartition p;
  p.k = universal_set(g);
  const auto nk = static_cast<Vertex>(p.k.size());

  std::vector<char> in_k(static_cast<std::size_t>(n), 0);
  for (Vertex v : p.k) in_k[static_cast<std::size_t>(v)] = 1;

  // Degree inside G - K: every non-universal vertex sees all of K.
  auto rest_degree = [&](Vertex v) { return g.degree(v) - nk; };

  Vertex start = -1;
  std::size_t rest_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_k[static_cast<std::size_t>(v)]) continue;
    if (rest_degree(v) == 0) {
      p.z.push_back(v);
    } else {
      if (start < 0) start = v;
      ++rest_count;
    }
  }
  if (start < 0) return p;

  std::vector<std::int8_t> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{start};
  side[static_cast<std::size_t>(start)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (in_k[wi]) continue;
      if (side[wi] < 0) {
        side[wi] = static_cast<std::int8_t>(1 - side[static_cast<std::size_t>(v)]);
        parent[wi] = v;
        queue.push_back(w);
      } else if (side[wi] == side[static_cast<std::size_t>(v)]) {
        // Odd cycle through the BFS tree paths of v and w.
        std::vector<Vertex> pv{v};
        std::vector<Vertex> pw{w};
        // Same side means same BFS depth, so both paths climb in lockstep.
        while (pv.back() != pw.back()) {
          pv.push_back(parent[static_cast<std::size_t>(pv.back())]);
          pw.push_back(parent[static_cast<std::size_t>(pw.back())]);
        }
        std::vector<Vertex> cycle(pv.begin(), pv.end());
        for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
        return KxyzFailure{KxyzFailure::Kind::odd_cycle, std::move(cycle)};
      }
    }
  }
  if (queue.size() != rest_count) {
    Vertex other = -1;
    for (Vertex v = 0; v < n && other < 0; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!in_k[vi] && side[vi] < 0 && rest_degree(v) > 0) other = v;
    }
    return KxyzFailure{KxyzFailure::Kind::two_components, {start, other}};
  }
  for (Vertex v : queue) (side[static_cast<std::size_t>(v)] == 0 ? p.x : p.y).push_back(v);
  std::sort(p.x.begin(), p.x.end());
  std::sort(p.y.begin(), p.y.end());

  auto missing_partner = [&](Vertex v, const VertexSet& other) -> std::optional<Vertex> {
    for (Vertex w : other)
      if (!g.has_edge(v, w)) return w;
    return std::nullopt;
  };
  for (Vertex v : p.x) {
    if (rest_degree(v) != static_cast<Vertex>(p.y.size())) {
      return KxyzFailure{KxyzFailure::Kind::missing_cross_edge, {v, *missing_partner(v, p.y)}};
    }
  }
  for (Vertex v : p.y) {
    if (rest_degree(v) != static_cast<Vertex>(p.x.size())) {
      return KxyzFailure{KxyzFailure::Kind::missing_cross_edge, {*missing_partner(v, p.x), v}};
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Block graphs

/// Induced subgraph on one block together with the local-to-global map.
struct BlockSubgraph {
  Graph graph;
  VertexSet vertices;  // local id i is global vertices[i]
};

/// Builds G[B] from the block's own edges in O(|B| + |E(B)|). `local` is
/// scratch space of size n filled with -1; it is restored before returning.
inline BlockSubgraph block_subgraph(const Graph& g, const BlockDecomposition& bd, std::size_t block,
                                    std::vector<Vertex>& local) {
  const auto verts = bd.block(block);
  for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  es.reserve(bd.edges_of(block).size());
  for (std::uint32_t id : bd.edges_of(block)) {
    const Edge& e = g.edges()[id];
    es.emplace_back(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
  }
  for (Vertex v : verts) local[static_cast<std::size_t>(v)] = -1;
  return {Graph(static_cast<Vertex>(verts.size()), std::move(es)), VertexSet(verts.begin(), verts.end())};
}

inline BlockSubgraph block_subgraph(const Graph& g, const BlockDecomposition& bd, std::size_t block) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  return block_subgraph(g, bd, block, local);
}

/// A non-adjacent pair inside the block, for a non-clique block.
inline Edge non_adjacent_pair(const BlockSubgraph& sub) {
  const Graph& h = sub.graph;
  for (Vertex u = 0; u < h.order(); ++u) {
    if (h.degree(u) == h.order() - 1) continue;
    const auto nb = h.neighbors(u);
    for (Vertex w = 0; w < h.order(); ++w) {
      if (w != u && !std::binary_search(nb.begin(), nb.end(), w)) {
        return {sub.vertices[static_cast<std::size_t>(u)], sub.vertices[static_cast<std::size_t>(w)]};
      }
    }
  }
  throw std::logic_error("non_adjacent_pair called on a clique block");
}

struct BlockGraphCheck {
  bool is_block_graph = true;
  std::optional<std::size_t> block;  // offending block
  std::optional<Edge> witness;       // non-adjacent pair inside it
};

/// True iff every block induces a clique.
inline BlockGraphCheck is_block_graph(const Graph& g, const BlockDecomposition& bd) {
  for (std::size_t b = 0; b < bd.block_count(); ++b) {
    if (!bd.is_clique_block(b)) {
      return {false, b, non_adjacent_pair(block_subgraph(g, bd, b))};
    }
  }
  return {};
}

inline BlockGraphCheck is_block_graph(const Graph& g) { return is_block_graph(g, block_decomposition(g)); }

// ---------------------------------------------------------------------------
// Chordal graphs

/// Lexicographic breadth-first search by partition refinement, O(n + m).
/// Returns vertices in visiting order.
inline std::vector<Vertex> lex_bfs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  // Classes are contiguous ranges [begin, end) of `order`.
  std::vector<std::size_t> cls(n, 0);
  std::vector<std::size_t> cbegin{0};
  std::vector<std::size_t> cend{n};
  std::vector<std::size_t> split_into{SIZE_MAX};  // class created from c this round
  std::vector<std::size_t> split_round{SIZE_MAX};
  std::vector<char> visited(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    const auto vi = static_cast<std::size_t>(v);
    visited[vi] = 1;
    ++cbegin[cls[vi]];
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (visited[wi]) continue;
      const std::size_t c = cls[wi];
      std::size_t nc = split_into[c];
      if (split_round[c] != i) {
        nc = cbegin.size();
        cbegin.push_back(cbegin[c]);
        cend.push_back(cbegin[c]);
        split_into.push_back(SIZE_MAX);
        split_round.push_back(SIZE_MAX);
        split_into[c] = nc;
        split_round[c] = i;
      }
      // Swap w to the front of class c and hand that slot to class nc.
      const std::size_t front = cbegin[c];
      const Vertex u = order[front];
      std::swap(order[front], order[pos[wi]]);
      pos[static_cast<std::size_t>(u)] = pos[wi];
      pos[wi] = front;
      ++cbegin[c];
      ++cend[nc];
      cls[wi] = nc;
    }
  }
  return order;
}

struct ChordalityCheck {
  bool chordal = true;
  std::vector<Vertex> elimination_order;  // perfect elimination order when chordal
  std::vector<Vertex> hole;               // chordless cycle of length >= 4 otherwise
};

namespace detail {

/// Shortest a-b path avoiding N[center] except a and b themselves.
inline std::optional<std::vector<Vertex>> path_around(const Graph& g, Vertex center, Vertex a, Vertex b) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> blocked(n, 0);
  blocked[static_cast<std::size_t>(center)] = 1;
  for (Vertex w : g.neighbors(center)) blocked[static_cast<std::size_t>(w)] = 1;
  blocked[static_cast<std::size_t>(a)] = 0;
  blocked[static_cast<std::size_t>(b)] = 0;
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{a};
  seen[static_cast<std::size_t>(a)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (v == b) break;
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (blocked[wi] || seen[wi]) continue;
      seen[wi] = 1;
      parent[wi] = v;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(b)]) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex center, Vertex a, Vertex b) {
  auto path = path_around(g, center, a, b);
  if (!path) return std::nullopt;
  std::vector<Vertex> cycle{center};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

}  // namespace detail

/// Chordality via LexBFS and a perfect-elimination check. Non-chordal
/// graphs come back with a chordless cycle of length at least 4.
inline ChordalityCheck is_chordal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const std::vector<Vertex> visit = lex_bfs(g);
  std::vector<std::size_t> when(n);
  for (std::size_t i = 0; i < n; ++i) when[static_cast<std::size_t>(visit[i])] = i;

  // In the reversed visiting order, the neighbors of v that come later are
  // the ones visited before v; the latest-visited of them is v's parent.
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = visit[i];
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (when[static_cast<std::size_t>(w)] < i &&
          (parent < 0 || when[static_cast<std::size_t>(w)] > when[static_cast<std::size_t>(parent)])) {
        parent = w;
      }
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent || when[static_cast<std::size_t>(w)] >= i) continue;
      if (g.has_edge(w, parent)) continue;
      ChordalityCheck out;
      out.chordal = false;
      if (auto hole = detail::hole_through(g, v, parent, w)) {
        out.hole = std::move(*hole);
        return out;
      }
      // Fall back to scanning every vertex and non-adjacent neighbor pair.
      for (Vertex c = 0; c < g.order(); ++c) {
        const auto nb = g.neighbors(c);
        for (std::size_t x = 0; x < nb.size(); ++x) {
          for (std::size_t y = x + 1; y < nb.size(); ++y) {
            if (g.has_edge(nb[x], nb[y])) continue;
            if (auto h = detail::hole_through(g, c, nb[x], nb[y])) {
              out.hole = std::move(*h);
              return out;
            }
          }
        }
      }
      throw std::logic_error("elimination check failed but no hole was found");
    }
  }
  ChordalityCheck out;
  out.elimination_order.assign(visit.rbegin(), visit.rend());
  return out;
}

// ---------------------------------------------------------------------------
// Distance-hereditary and ptolemaic graphs

/// Pendant-vertex and twin elimination, always removing the lowest eligible
/// id. The graph is distance-hereditary iff nothing but isolated vertices
/// remains. Quadratic-space; intended for small graphs.
inline bool is_distance_hereditary(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  auto row = [&](std::size_t v) { return rows.data() + v * words; };
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> deg(n);
  std::size_t live_edges = g.size();
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<std::size_t>(g.degree(static_cast<Vertex>(v)));

  // N(u) \ {v} == N(v) \ {u}, restricted to live vertices (dead rows are cleared).
  auto twins = [&](std::size_t u, std::size_t v) {
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t a = row(u)[k];
      std::uint64_t b = row(v)[k];
      if (k == v / 64) a &= ~(std::uint64_t{1} << (v % 64));
      if (k == u / 64) b &= ~(std::uint64_t{1} << (u % 64));
      if (a != b) return false;
    }
    return true;
  };

  while (live_edges > 0) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v) {
      if (!alive[v]) continue;
      if (deg[v] == 1) {
        pick = v;
        break;
      }
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v && alive[u] && twins(u, v)) {
          pick = v;
          break;
        }
      }
    }
    if (pick == n) return false;
    alive[pick] = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if ((row(pick)[u / 64] >> (u % 64)) & 1) {
        row(u)[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
        --deg[u];
        --live_edges;
      }
    }
    std::fill(row(pick), row(pick) + words, 0);
    deg[pick] = 0;
  }
  return true;
}

/// Gem-free chordal.
inline bool is_ptolemaic(const Graph& g) {
  return is_chordal(g).chordal && !contains_induced(g, patterns::gem());
}

}  // namespace probeblock
