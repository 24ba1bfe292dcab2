#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "probeblock/graph.hpp"

namespace probeblock {

// Forbidden-pattern catalog.
//
// F1-F3 obstruct probe block graphs, B1-B6 are the 2-connected obstructions
// and G1-G16 the gluing obstructions for 2-probe block graphs. Vertex i of a
// catalog graph is the i-th node of the corresponding figure drawing, in the
// order the drawing declares its nodes (names such as "5a"/"5b" keep that
// order). The catalog is validated by tests, not trusted: every entry must be
// rejected by the brute-force recognizer, every one-vertex deletion must be
// accepted, and B1, B3 must match their join decompositions.
//
// Degree-2 structure worth knowing when reading the lists:
//   F1 = K2 * (K2 + K1), degree sequence 4,4,3,3,2.
//   F2 = two diamonds sharing a vertex that has degree 2 in one, 3 in the other.
//   F3 = two diamonds joined by a bridge between degree-2 vertices.
//   G1..G4   diamond/C4 glued to F1 or a 4-wheel at a universal vertex.
//   G5..G7   F1 glued at its degree-2 vertex to a diamond, C4 or K2*(K1+P3).
//   G8, G9   F1 bridged from its degree-2 vertex to a diamond or C4.
//   G10..G12 chains of three diamond/C4 blocks.
//   G13..G16 a triangle with a diamond/C4 hanging at each corner.

namespace detail {

inline Graph from_pairs(Vertex n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> es;
  for (auto [a, b] : pairs) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

// Shared pieces, 0-based; comments give the drawing labels.
// diamond on drawing nodes 1,2,3,4 with 1 and 4 the degree-2 vertices
inline constexpr std::pair<int, int> kDiamond1234[] = {{1, 3}, {2, 3}, {1, 2}, {0, 1}, {0, 2}};
// C4 1-2-4-3-1
inline constexpr std::pair<int, int> kSquare1234[] = {{1, 3}, {2, 3}, {0, 2}, {0, 1}};

inline Graph assemble(Vertex n, std::initializer_list<std::span<const std::pair<int, int>>> parts,
                      std::initializer_list<std::pair<int, int>> extra = {}) {
  std::vector<Edge> es;
  for (auto part : parts)
    for (auto [a, b] : part) es.emplace_back(a, b);
  for (auto [a, b] : extra) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

}  // namespace detail

namespace patterns {

using detail::from_pairs;

inline Graph k1() { return Graph(1); }
inline Graph k2() { return complete_graph(2); }
inline Graph two_k1() { return Graph(2); }
inline Graph p4() { return path_graph(4); }
inline Graph c4() { return cycle_graph(4); }
inline Graph two_k2() { return disjoint_union(k2(), k2()); }
inline Graph k2_plus_k1() { return disjoint_union(k2(), k1()); }
inline Graph k3_plus_k1() { return disjoint_union(complete_graph(3), k1()); }

/// K4 minus the edge {2,3}.
inline Graph diamond() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// Path 0-1-2-3 joined to apex 4.
inline Graph gem() { return join(p4(), k1()); }

/// C5 0..4 with chord {1,4}.
inline Graph house() { return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}); }

/// C6 0..5 with long chord {0,3}.
inline Graph domino() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
}

/// Chordless cycle of the given length (a hole when length >= 5).
inline Graph hole(Vertex length) { return cycle_graph(length); }

/// 2K1 * 2K1 * 2K1.
inline Graph octahedron() { return join(join(two_k1(), two_k1()), two_k1()); }

// Figure 1. Drawing nodes 1..n map to 0..n-1.
inline Graph f1() {
  return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 3}, {3, 1}, {1, 4}});
}
inline Graph f2() {
  return from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 1}, {0, 2}, {3, 6}});
}
inline Graph f3() {
  return from_pairs(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}, {0, 2}, {1, 3}, {4, 6}});
}

// Figure 2. Nodes 1,2,34,5,6 for B1; 1..6 otherwise.
inline Graph b1() {
  return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 3}, {1, 4}});
}
inline Graph b2() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {2, 5}});
}
inline Graph b3() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {2, 5},
                        {0, 4}, {4, 2}, {3, 1}, {1, 5}});
}
inline Graph b4() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 5}, {5, 3}, {3, 0}});
}
inline Graph b5() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 5}, {5, 3},
                        {2, 4}, {1, 5}});
}
inline Graph b6() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 5}, {5, 3},
                        {3, 0}, {1, 3}, {1, 5}});
}

// Figure 3, G1-G4. Nodes 1,2,3,4,5a,5b,6,7 -> 0..7.
// Left part: nodes 1-4. Right part on 4,5a,5b,6,7 (ids 3,4,5,6,7).
namespace detail_g {
inline constexpr std::pair<int, int> kF1Right[] = {{4, 3}, {3, 6}, {6, 7}, {7, 5}, {5, 4}, {4, 7}, {7, 3}, {3, 5}};
inline constexpr std::pair<int, int> kWheelRight[] = {{4, 3}, {3, 6}, {6, 7}, {7, 5}, {5, 4}, {4, 6}, {7, 3}, {3, 5}};

// G5-G9 left part on 1a,1b,2,3,4 (ids 0..4): F1 with degree-2 vertex 4.
inline constexpr std::pair<int, int> kF1Left[] = {{0, 2}, {2, 3}, {0, 3}, {0, 1}, {1, 2}, {1, 3}};

// G10-G12 middle diamond on nodes 4,5,6,7 (ids 3..6) with 4 and 7 universal.
inline constexpr std::pair<int, int> kMiddleDiamond[] = {{3, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 6}};

// G13-G16: triangle on nodes 4,5,9 (ids 3,4,8).
inline constexpr std::pair<int, int> kTriangle[] = {{4, 3}, {3, 8}, {8, 4}};
inline constexpr std::pair<int, int> kTopDiamond[] = {{5, 6}, {6, 7}, {7, 4}, {4, 5}, {5, 7}};
inline constexpr std::pair<int, int> kTopSquare[] = {{5, 6}, {6, 7}, {7, 4}, {4, 5}};
inline constexpr std::pair<int, int> kRightDiamond[] = {{10, 11}, {11, 9}, {9, 8}, {8, 10}, {10, 9}};
inline constexpr std::pair<int, int> kRightSquare[] = {{10, 11}, {11, 9}, {9, 8}, {8, 10}};
}  // namespace detail_g

inline Graph g1() { return detail::assemble(8, {detail::kDiamond1234, detail_g::kF1Right}); }
inline Graph g2() { return detail::assemble(8, {detail::kSquare1234, detail_g::kF1Right}); }
inline Graph g3() { return detail::assemble(8, {detail::kDiamond1234, detail_g::kWheelRight}); }
inline Graph g4() { return detail::assemble(8, {detail::kSquare1234, detail_g::kWheelRight}); }

// G5-G9. Nodes 1a,1b,2,3,4,5,6,7[,8] -> 0..7[,8].
inline Graph g5() {
  return detail::assemble(8, {detail_g::kF1Left}, {{2, 4}, {3, 4}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {4, 7}});
}
inline Graph g6() {
  return detail::assemble(8, {detail_g::kF1Left}, {{2, 4}, {3, 4}, {4, 5}, {5, 7}, {7, 6}, {6, 4}});
}
inline Graph g7() {
  return detail::assemble(9, {detail_g::kF1Left},
                          {{2, 4}, {3, 4}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {4, 7}, {5, 6}, {6, 8}, {8, 7}});
}
inline Graph g8() {
  return detail::assemble(9, {detail_g::kF1Left},
                          {{2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {8, 7}, {7, 5}, {6, 7}});
}
inline Graph g9() {
  return detail::assemble(9, {detail_g::kF1Left}, {{2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {8, 7}, {7, 5}});
}

// G10-G12. Nodes 1..10 -> 0..9.
inline Graph g10() {
  return detail::assemble(10, {detail::kDiamond1234, detail_g::kMiddleDiamond},
                          {{7, 9}, {9, 8}, {8, 6}, {6, 7}, {7, 8}});
}
inline Graph g11() {
  return detail::assemble(10, {detail::kSquare1234, detail_g::kMiddleDiamond},
                          {{7, 9}, {9, 8}, {8, 6}, {6, 7}, {7, 8}});
}
inline Graph g12() {
  return detail::assemble(10, {detail::kSquare1234, detail_g::kMiddleDiamond},
                          {{7, 9}, {9, 8}, {8, 6}, {6, 7}});
}

// G13-G16. Nodes 1..12 -> 0..11.
inline Graph g13() {
  return detail::assemble(12, {detail::kDiamond1234, detail_g::kTriangle, detail_g::kTopDiamond,
                               detail_g::kRightDiamond});
}
inline Graph g14() {
  return detail::assemble(12, {detail::kSquare1234, detail_g::kTriangle, detail_g::kTopDiamond,
                               detail_g::kRightDiamond});
}
inline Graph g15() {
  return detail::assemble(12, {detail::kSquare1234, detail_g::kTriangle, detail_g::kTopSquare,
                               detail_g::kRightDiamond});
}
inline Graph g16() {
  return detail::assemble(12, {detail::kSquare1234, detail_g::kTriangle, detail_g::kTopSquare,
                               detail_g::kRightSquare});
}

}  // namespace patterns

/// Catalog entries by name, in catalog order.
inline const std::vector<std::string>& pattern_names() {
  static const std::vector<std::string> names = {
      "F1", "F2", "F3", "B1", "B2", "B3", "B4", "B5", "B6", "G1", "G2", "G3", "G4", "G5",
      "G6", "G7", "G8", "G9", "G10", "G11", "G12", "G13", "G14", "G15", "G16", "house",
      "domino", "gem", "diamond", "P4", "2K2", "K2+K1", "K3+K1", "C4", "octahedron"};
  return names;
}

/// Looks up a catalog pattern. `C<l>` (l >= 3) yields the cycle of length l.
/// Unknown names throw DomainError.
inline Graph pattern(std::string_view name) {
  using namespace patterns;
  static const std::map<std::string, Graph (*)(), std::less<>> table = {
      {"F1", f1},       {"F2", f2},         {"F3", f3},        {"B1", b1},
      {"B2", b2},       {"B3", b3},         {"B4", b4},        {"B5", b5},
      {"B6", b6},       {"G1", g1},         {"G2", g2},        {"G3", g3},
      {"G4", g4},       {"G5", g5},         {"G6", g6},        {"G7", g7},
      {"G8", g8},       {"G9", g9},         {"G10", g10},      {"G11", g11},
      {"G12", g12},     {"G13", g13},       {"G14", g14},      {"G15", g15},
      {"G16", g16},     {"house", house},   {"domino", domino}, {"gem", gem},
      {"diamond", diamond}, {"P4", p4},     {"2K2", two_k2},   {"K2+K1", k2_plus_k1},
      {"K3+K1", k3_plus_k1}, {"C4", c4},    {"octahedron", octahedron}};
  if (auto it = table.find(name); it != table.end()) return it->second();
  if (name.size() >= 2 && name[0] == 'C') {
    int len = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9' || len > 1000) throw DomainError("unknown pattern: " + std::string(name));
      len = len * 10 + (c - '0');
    }
    if (len >= 3) return hole(len);
  }
  throw DomainError("unknown pattern: " + std::string(name));
}

}  // namespace probeblock
