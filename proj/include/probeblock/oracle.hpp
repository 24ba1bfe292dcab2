#pragma once

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "probeblock/decomposition.hpp"
#include "probeblock/graph.hpp"
#include "probeblock/induced_search.hpp"
#include "probeblock/patterns.hpp"
#include "probeblock/probe.hpp"

namespace probeblock {

/// Raised when an exponential oracle is asked about a graph above its size
/// guard.
class OversizeError : public std::length_error {
 public:
  OversizeError(const std::string& what, Vertex order, Vertex limit)
      : std::length_error(what + ": order " + std::to_string(order) + " exceeds limit " + std::to_string(limit)) {}
};

namespace detail {

using Mask = std::uint64_t;

inline Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline VertexSet set_of(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

/// Bron-Kerbosch with pivoting; reports maximal cliques of the graph given by
/// `adj`, restricted to vertices in `p`.
template <class Report>
void maximal_cliques(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, Report& report) {
  if (p == 0 && x == 0) {
    report(r);
    return;
  }
  const Mask px = p | x;
  Vertex pivot = static_cast<Vertex>(std::countr_zero(px));
  int best = -1;
  for (Mask it = px; it; it &= it - 1) {
    const auto u = static_cast<Vertex>(std::countr_zero(it));
    const int c = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask it = p & ~adj[static_cast<std::size_t>(pivot)]; it; it &= it - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(it));
    const Mask bit = Mask{1} << v;
    const Mask nv = adj[static_cast<std::size_t>(v)];
    maximal_cliques(adj, r | bit, p & nv, x & nv, report);
    p &= ~bit;
    x |= bit;
  }
}

/// Non-adjacent pairs that an embedding must add: those inside a common block
/// (block target) or all of them (complete target).
inline std::vector<Mask> required_pairs(const Graph& g, Target target) {
  std::vector<Mask> pairs;
  const auto adj = adjacency_masks(g);
  if (target == Target::complete) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!(adj[static_cast<std::size_t>(u)] >> v & 1)) pairs.push_back((Mask{1} << u) | (Mask{1} << v));
    return pairs;
  }
  const BlockDecomposition bd = block_decomposition(g);
  for (std::size_t id = 0; id < bd.block_count(); ++id) {
    const auto b = bd.block(id);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!(adj[static_cast<std::size_t>(b[i])] >> b[j] & 1)) pairs.push_back((Mask{1} << b[i]) | (Mask{1} << b[j]));
  }
  return pairs;
}

}  // namespace detail

/// Exhaustive k-probe recognition for k in {1, 2}.
///
/// Only vertices of some required pair matter: dropping any other vertex from
/// a non-probe set keeps it independent and covers the same pairs. Covering
/// is monotone under growing the sets, so it suffices to try k-tuples of
/// maximal independent sets of the graph induced on those vertices. The
/// witness is the first passing tuple in ascending bitmask order, trimmed to
/// the vertices of the pairs each set covers.
inline RecognitionOutcome brute_kprobe(const Graph& g, int k, Target target, Vertex max_order = 12) {
  if (k != 1 && k != 2) throw DomainError("brute_kprobe supports k = 1 or 2");
  if (g.order() > max_order || g.order() > 63) throw OversizeError("brute_kprobe", g.order(), std::min<Vertex>(max_order, 63));
  using detail::Mask;

  const std::vector<Mask> pairs = detail::required_pairs(g, target);
  Mask relevant = 0;
  for (Mask p : pairs) relevant |= p;

  // Maximal independent sets of G[relevant] = maximal cliques of its complement.
  std::vector<Mask> co_adj = detail::adjacency_masks(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& row = co_adj[static_cast<std::size_t>(v)];
    row = ~row & relevant & ~(Mask{1} << v);
  }
  std::vector<Mask> mis;
  auto collect = [&](Mask m) { mis.push_back(m); };
  detail::maximal_cliques(co_adj, 0, relevant, 0, collect);
  std::sort(mis.begin(), mis.end());

  auto covered = [](Mask p, Mask s) { return (p & s) == p; };
  auto trimmed = [&](Mask s) {
    Mask out = 0;
    for (Mask p : pairs)
      if (covered(p, s)) out |= p;
    return out;
  };
  auto certify = [&](Mask a, Mask b) {
    RecognitionOutcome out = verify_partitioned(g, detail::set_of(a), detail::set_of(b), target);
    if (!out.accepted()) throw std::logic_error("brute_kprobe: witness failed verification");
    return out;
  };

  for (std::size_t i = 0; i < mis.size(); ++i) {
    if (k == 1) {
      if (std::all_of(pairs.begin(), pairs.end(), [&](Mask p) { return covered(p, mis[i]); }))
        return certify(trimmed(mis[i]), 0);
      continue;
    }
    for (std::size_t j = i; j < mis.size(); ++j) {
      if (std::all_of(pairs.begin(), pairs.end(),
                      [&](Mask p) { return covered(p, mis[i]) || covered(p, mis[j]); })) {
        const Mask a = trimmed(mis[i]);
        Mask b = 0;
        for (Mask p : pairs)
          if (!covered(p, a)) b |= p;
        return certify(a, b);
      }
    }
  }
  return RecognitionOutcome::no(Exhausted{k});
}

/// Minimum number of cliques covering every edge; 0 for edgeless graphs.
/// Branch and bound over maximal cliques, always branching on the uncovered
/// edge with the fewest covering cliques.
inline int edge_clique_cover_min(const Graph& g, Vertex max_order = 16) {
  if (g.order() > max_order || g.order() > 16) throw OversizeError("edge_clique_cover_min", g.order(), std::min<Vertex>(max_order, 16));
  const std::size_t m = g.size();
  if (m == 0) return 0;
  using EdgeMask = std::bitset<120>;
  using detail::Mask;

  const auto adj = detail::adjacency_masks(g);
  std::vector<Mask> cliques;
  auto collect = [&](Mask c) { cliques.push_back(c); };
  detail::maximal_cliques(adj, 0, (Mask{1} << g.order()) - 1, 0, collect);

  std::vector<EdgeMask> covers;
  for (Mask c : cliques) {
    EdgeMask em;
    for (std::size_t e = 0; e < m; ++e)
      if ((c >> g.edges()[e].u & 1) && (c >> g.edges()[e].v & 1)) em.set(e);
    if (em.any()) covers.push_back(em);
  }
  std::vector<std::vector<std::size_t>> by_edge(m);
  for (std::size_t c = 0; c < covers.size(); ++c)
    for (std::size_t e = 0; e < m; ++e)
      if (covers[c][e]) by_edge[e].push_back(c);

  std::size_t max_cover = 0;
  for (const auto& c : covers) max_cover = std::max(max_cover, c.count());

  int best = static_cast<int>(m);  // one clique per edge always works
  EdgeMask full;
  for (std::size_t e = 0; e < m; ++e) full.set(e);

  auto search = [&](auto& self, const EdgeMask& done, int used) -> void {
    if (done == full) {
      best = std::min(best, used);
      return;
    }
    const std::size_t left = m - done.count();
    if (used + static_cast<int>((left + max_cover - 1) / max_cover) >= best) return;
    std::size_t pick = m;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t e = 0; e < m; ++e) {
      if (done[e]) continue;
      if (by_edge[e].size() < fewest) {
        fewest = by_edge[e].size();
        pick = e;
      }
    }
    for (std::size_t c : by_edge[pick]) self(self, done | covers[c], used + 1);
  };
  search(search, EdgeMask{}, 0);
  return best;
}

enum class Family { probe_block, blocks_2probe, gluing_2probe, distance_hereditary, ptolemaic };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::probe_block: return "probe-block";
    case Family::blocks_2probe: return "2probe-block-blocks";
    case Family::gluing_2probe: return "2probe-block-gluing";
    case Family::distance_hereditary: return "dh";
    case Family::ptolemaic: return "ptolemaic";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::probe_block, Family::blocks_2probe, Family::gluing_2probe, Family::distance_hereditary,
                   Family::ptolemaic}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("unknown family: " + std::string(name));
}

/// Pattern names scanned for a family on graphs of the given order, in scan
/// order. Holes are listed up to the order.
inline std::vector<std::string> family_patterns(Family f, Vertex order) {
  std::vector<std::string> names;
  auto holes_from = [&](Vertex first) {
    for (Vertex l = first; l <= order; ++l) names.push_back("C" + std::to_string(l));
  };
  switch (f) {
    case Family::probe_block:
      names = {"F1", "F2", "F3", "gem"};
      holes_from(4);
      break;
    case Family::blocks_2probe:
      names = {"B1", "B2", "B3", "B4", "B5", "B6"};
      break;
    case Family::gluing_2probe:
      for (int i = 1; i <= 16; ++i) names.push_back("G" + std::to_string(i));
      break;
    case Family::distance_hereditary:
      names = {"house", "domino", "gem"};
      holes_from(5);
      break;
    case Family::ptolemaic:
      names = {"gem"};
      holes_from(4);
      break;
  }
  return names;
}

struct Witness {
  std::string pattern;
  std::vector<Vertex> mapping;  // mapping[i] = host vertex for pattern vertex i
};

/// First induced occurrence of a family member, scanning in family order.
inline std::optional<Witness> forbidden_witness(const Graph& g, Family f, Vertex max_order = 64) {
  if (g.order() > max_order) throw OversizeError("forbidden_witness", g.order(), max_order);
  for (const std::string& name : family_patterns(f, g.order())) {
    if (auto phi = find_induced(g, pattern(name))) return Witness{name, std::move(*phi)};
  }
  return std::nullopt;
}

}  // namespace probeblock
