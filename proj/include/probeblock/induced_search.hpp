#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "probeblock/graph.hpp"

namespace probeblock {

namespace detail {

/// Dense adjacency rows for constant-time pair lookups on small graphs.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g)
      : words_((static_cast<std::size_t>(g.order()) + 63) / 64),
        bits_(words_ * static_cast<std::size_t>(g.order()), 0) {
    for (const Edge& e : g.edges()) {
      set(e.u, e.v);
      set(e.v, e.u);
    }
  }

  bool operator()(Vertex a, Vertex b) const {
    const auto row = static_cast<std::size_t>(a) * words_;
    const auto col = static_cast<std::size_t>(b);
    return (bits_[row + col / 64] >> (col % 64)) & 1u;
  }

 private:
  void set(Vertex a, Vertex b) {
    const auto row = static_cast<std::size_t>(a) * words_;
    const auto col = static_cast<std::size_t>(b);
    bits_[row + col / 64] |= std::uint64_t{1} << (col % 64);
  }

  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Finds an induced copy of `pattern` in `host`.
///
/// Returns phi with phi[i] the host vertex playing pattern vertex i. The
/// search is a backtracking extension in a fixed pattern-vertex order with
/// host candidates tried in ascending id, so the first match is
/// deterministic.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
  const Vertex k = pattern.order();
  if (k == 0) return std::vector<Vertex>{};
  if (k > host.order()) return std::nullopt;

  // Pattern order: each next vertex has the most already-placed neighbors,
  // then the highest degree, then the lowest id.
  std::vector<Vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  std::vector<int> placed_nbrs(static_cast<std::size_t>(k), 0);
  for (Vertex step = 0; step < k; ++step) {
    Vertex best = -1;
    for (Vertex u = 0; u < k; ++u) {
      if (placed[static_cast<std::size_t>(u)]) continue;
      if (best < 0 || placed_nbrs[static_cast<std::size_t>(u)] > placed_nbrs[static_cast<std::size_t>(best)] ||
          (placed_nbrs[static_cast<std::size_t>(u)] == placed_nbrs[static_cast<std::size_t>(best)] &&
           pattern.degree(u) > pattern.degree(best))) {
        best = u;
      }
    }
    placed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (Vertex w : pattern.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(w)];
  }

  // anchor[i]: an earlier pattern vertex adjacent to order[i], or -1.
  std::vector<Vertex> anchor(static_cast<std::size_t>(k), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pattern.has_edge(order[i], order[j])) {
        anchor[i] = order[j];
        break;
      }
    }
  }

  const detail::AdjacencyMatrix adj(host);
  std::vector<Vertex> phi(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);

  auto consistent = [&](std::size_t depth, Vertex cand) {
    const Vertex u = order[depth];
    if (used[static_cast<std::size_t>(cand)] || host.degree(cand) < pattern.degree(u)) return false;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex w = order[j];
      if (pattern.has_edge(u, w) != adj(cand, phi[static_cast<std::size_t>(w)])) return false;
    }
    return true;
  };

  // Explicit stack of candidate cursors per depth.
  std::vector<std::size_t> cursor(static_cast<std::size_t>(k), 0);
  std::size_t depth = 0;
  while (true) {
    const Vertex u = order[depth];
    const Vertex a = anchor[depth];
    bool advanced = false;
    if (a >= 0) {
      const auto cands = host.neighbors(phi[static_cast<std::size_t>(a)]);
      while (cursor[depth] < cands.size()) {
        const Vertex c = cands[cursor[depth]++];
        if (consistent(depth, c)) {
          phi[static_cast<std::size_t>(u)] = c;
          advanced = true;
          break;
        }
      }
    } else {
      while (cursor[depth] < static_cast<std::size_t>(host.order())) {
        const auto c = static_cast<Vertex>(cursor[depth]++);
        if (consistent(depth, c)) {
          phi[static_cast<std::size_t>(u)] = c;
          advanced = true;
          break;
        }
      }
    }
    if (advanced) {
      used[static_cast<std::size_t>(phi[static_cast<std::size_t>(u)])] = 1;
      if (depth + 1 == order.size()) return phi;
      ++depth;
      cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    used[static_cast<std::size_t>(phi[static_cast<std::size_t>(order[depth])])] = 0;
  }
}

inline bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(host, pattern).has_value();
}

}  // namespace probeblock
