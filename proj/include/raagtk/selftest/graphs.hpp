#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "raagtk/graph.hpp"

namespace raagtk::verify {

/// Every simplicial graph on exactly n vertices, one per isomorphism class,
/// named a, b, c, ... (n <= 6).
inline std::vector<DefGraph> graphs_on(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::uint64_t> seen;
  std::vector<DefGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    // Canonical code: least edge mask over all relabellings.
    std::uint64_t best = ~std::uint64_t{0};
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      std::uint64_t code = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (!((mask >> s) & 1U)) continue;
        int a = perm[static_cast<std::size_t>(slots[s].first)], b = perm[static_cast<std::size_t>(slots[s].second)];
        if (a > b) std::swap(a, b);
        const auto idx = std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin();
        code |= std::uint64_t{1} << idx;
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) edges.push_back(slots[s]);
    out.push_back(DefGraph::from_edges(n, edges));
  }
  return out;
}

/// All graphs with 1..max_n vertices up to isomorphism.
inline std::vector<DefGraph> small_graphs(int max_n) {
  std::vector<DefGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : graphs_on(n)) out.push_back(std::move(g));
  return out;
}

inline DefGraph path3() { return DefGraph::parse("vertices: a b c\nedge: a b\nedge: b c\n"); }
inline DefGraph z2() { return DefGraph::parse("vertices: a b\nedge: a b\n"); }
inline DefGraph free2() { return DefGraph::parse("vertices: a b\n"); }
inline DefGraph free_ac() { return DefGraph::parse("vertices: a c\n"); }
inline DefGraph square() {
  return DefGraph::parse("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\nedge: d a\n");
}

}  // namespace raagtk::verify
