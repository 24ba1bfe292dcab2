#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace probeblock {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

/// Thrown when an argument names a vertex outside the graph or breaks a
/// documented precondition on vertex sets.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept in compressed sparse rows with every neighbor list
/// sorted ascending. Each half-edge also records the id of its edge, where
/// edge ids index the lexicographically sorted edge list.
class Graph {
 public:
  Graph() = default;

  explicit Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw DomainError("negative vertex count");
  }

  /// Builds the graph from arbitrary pairs. Parallel pairs collapse to one
  /// edge; self-loops and out-of-range ids throw DomainError.
  Graph(Vertex n, std::vector<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} out of range for n=" + std::to_string(n));
      }
      if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (edges.size() > UINT32_MAX / 2) throw DomainError("too many edges");
    sort_edges(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    build_adjacency();
  }

  Vertex order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adj_.data() + b, e - b};
  }

  /// Edge ids parallel to neighbors(v).
  std::span<const std::uint32_t> incident_edges(Vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adj_edge_.data() + b, e - b};
  }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[static_cast<std::size_t>(v) + 1] -
                               offsets_[static_cast<std::size_t>(v)]);
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Hint that v's adjacency row is about to be read.
  void prefetch(Vertex v) const noexcept { __builtin_prefetch(offsets_.data() + v); }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  // Counting sort on the smaller endpoint, then a small sort per bucket.
  void sort_edges(std::vector<Edge>& edges) const {
    if (edges.size() < 64) {
      std::sort(edges.begin(), edges.end());
      return;
    }
    std::vector<std::size_t> start(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges) ++start[static_cast<std::size_t>(e.u) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<Edge> out(edges.size());
    std::vector<std::size_t> pos(start.begin(), start.end() - 1);
    for (const Edge& e : edges) out[pos[static_cast<std::size_t>(e.u)]++] = e;
    for (std::size_t u = 0; u < static_cast<std::size_t>(n_); ++u) {
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(start[u]),
                out.begin() + static_cast<std::ptrdiff_t>(start[u + 1]));
    }
    edges = std::move(out);
  }

  void build_adjacency() {
    for (const Edge& e : edges_) {
      ++offsets_[static_cast<std::size_t>(e.u) + 1];
      ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adj_.resize(2 * edges_.size());
    adj_edge_.resize(2 * edges_.size());
    std::vector<std::uint32_t> pos(offsets_.begin(), offsets_.end() - 1);
    // Edges are lexicographically sorted, so both endpoint lists fill in
    // ascending order.
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      auto& pu = pos[static_cast<std::size_t>(e.u)];
      adj_[pu] = e.v;
      adj_edge_[pu++] = static_cast<std::uint32_t>(id);
      auto& pv = pos[static_cast<std::size_t>(e.v)];
      adj_[pv] = e.u;
      adj_edge_[pv++] = static_cast<std::uint32_t>(id);
    }
  }

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};  // 2m < 2^32 is checked on construction
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_edge_;
};

// ---------------------------------------------------------------------------
// Vertex set helpers

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void check_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw DomainError("vertex " + std::to_string(v) + " not in graph of order " +
                        std::to_string(g.order()));
    }
  }
}

/// Returns an adjacent pair inside s, if any.
inline std::optional<Edge> find_internal_edge(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && in[static_cast<std::size_t>(w)]) return Edge{v, w};
    }
  }
  return std::nullopt;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  return !find_internal_edge(g, s).has_value();
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

inline Graph empty_graph(Vertex n) { return Graph(n); }

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

inline Graph path_graph(Vertex n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(Vertex n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(es));
}

/// Star K1,leaves with the center at vertex 0.
inline Graph star_graph(Vertex leaves) {
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph(leaves + 1, std::move(es));
}

enum class Composition { disjoint_union, join };

/// G + H or G * H. H's vertices are shifted past G's.
inline Graph compose(Composition kind, const Graph& g, const Graph& h) {
  const Vertex shift = g.order();
  std::vector<Edge> es(g.edges());
  for (const Edge& e : h.edges()) es.emplace_back(e.u + shift, e.v + shift);
  if (kind == Composition::join) {
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < h.order(); ++b) es.emplace_back(a, b + shift);
  }
  return Graph(g.order() + h.order(), std::move(es));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  return compose(Composition::disjoint_union, g, h);
}

inline Graph join(const Graph& g, const Graph& h) { return compose(Composition::join, g, h); }

/// G[S], with S relabeled 0..|S|-1 in ascending id order.
inline Graph induced(const Graph& g, const VertexSet& subset) {
  const VertexSet s = normalized(subset);
  check_vertices(g, s);
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && local[static_cast<std::size_t>(w)] >= 0) {
        es.emplace_back(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]);
      }
    }
  }
  return Graph(static_cast<Vertex>(s.size()), std::move(es));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      es.emplace_back(u, v);
    }
  }
  return Graph(g.order(), std::move(es));
}

/// G with the extra pairs added (pairs already present are ignored).
inline Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> es(g.edges());
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(g.order(), std::move(es));
}

}  // namespace probeblock
