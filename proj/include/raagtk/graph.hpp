#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raagtk/error.hpp"

namespace raagtk {

using Vertex = int;

inline constexpr int max_vertices = 64;

/// Subset of the vertices of a DefGraph, iterated in graph order.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr Vertex least() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Lexicographic in graph order of the members (least differing vertex wins).
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    const std::uint64_t d = a.bits_ ^ b.bits_;
    if (d == 0) return false;
    return (a.bits_ >> std::countr_zero(d)) & 1U;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

private:
  std::uint64_t bits_ = 0;
};

/// The finite simplicial graph defining a right-angled Artin group.
///
/// Vertex order is the declaration order and never changes; canonical normal
/// forms downstream depend on it. Immutable once built.
class DefGraph {
public:
  DefGraph() = default;

  explicit DefGraph(std::vector<std::string> names,
                    const std::vector<std::pair<std::string, std::string>>& edges = {})
      : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(max_vertices))
      throw Error(errc::parse_error, "at most 64 vertices are supported");
    adj_.assign(names_.size(), 0);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      check_name(names_[i]);
      if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
        throw Error(errc::parse_error, "duplicate vertex name '" + names_[i] + "'");
    }
    for (const auto& [a, b] : edges) add_edge(vertex(a), vertex(b));
  }

  /// Build from vertex count and index pairs; names are a, b, c, ... (then v26, v27, ...).
  static DefGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
    DefGraph g(std::move(names));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  static DefGraph parse(std::istream& in) {
    std::string line;
    bool have_vertices = false;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      const std::string where = " (line " + std::to_string(lineno) + ")";
      if (head == "vertices:") {
        if (have_vertices) throw Error(errc::parse_error, "repeated vertices line" + where);
        for (std::string t; ls >> t;) names.push_back(t);
        have_vertices = true;
      } else if (head == "edge:") {
        if (!have_vertices) throw Error(errc::parse_error, "edge before vertices line" + where);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
          throw Error(errc::parse_error, "edge line needs exactly two vertices" + where);
        edges.emplace_back(a, b);
      } else {
        throw Error(errc::parse_error, "unrecognised line '" + head + "'" + where);
      }
    }
    if (!have_vertices) throw Error(errc::parse_error, "missing vertices line");
    return DefGraph(std::move(names), edges);
  }

  static DefGraph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }

  /// Canonical text form: `vertices:` line, then edges sorted in graph order.
  std::string dump() const {
    std::string out = "vertices:";
    for (const auto& n : names_) out += " " + n;
    out += "\n";
    for (Vertex a = 0; a < size(); ++a)
      for (Vertex b = a + 1; b < size(); ++b)
        if (adjacent(a, b)) out += "edge: " + names_[a] + " " + names_[b] + "\n";
    return out;
  }

  int size() const { return static_cast<int>(names_.size()); }
  VertexSet all() const { return VertexSet::first_n(size()); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  bool has_vertex(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  Vertex vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw Error(errc::unknown_vertex, "unknown vertex '" + std::string(name) + "'");
    return it->second;
  }

  void check(Vertex v) const {
    if (v < 0 || v >= size()) throw Error(errc::unknown_vertex, "vertex index out of range");
  }
  void check(VertexSet s) const {
    if (!s.subset_of(all())) throw Error(errc::unknown_vertex, "vertex set not contained in graph");
  }

  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  std::uint64_t adjacency_bits(Vertex v) const { return adj_[v]; }

  int edge_count() const {
    int e = 0;
    for (auto m : adj_) e += std::popcount(m);
    return e / 2;
  }

  /// Size of the largest clique (= dimension of the Salvetti complex).
  int clique_number() const {
    int best = size() > 0 ? 1 : 0;
    clique_search(0, all().bits(), 0, best);
    return best;
  }

  VertexSet parse_set(std::string_view text) const {
    VertexSet s;
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) s.insert(vertex(tok));
      tok.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ' || c == '{' || c == '}') flush();
      else tok += c;
    }
    flush();
    return s;
  }

  std::string format_set(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
      if (!first) out += ",";
      out += names_[v];
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const DefGraph& a, const DefGraph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

private:
  static void check_name(const std::string& n) {
    if (n.empty() || n == "1" || n.find_first_of("^,.=;{}*") != std::string::npos)
      throw Error(errc::parse_error, "invalid vertex name '" + n + "'");
  }

  void add_edge(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) throw Error(errc::parse_error, "loop at vertex '" + names_[a] + "'");
    if (adjacent(a, b))
      throw Error(errc::parse_error, "repeated edge " + names_[a] + " " + names_[b]);
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
  }

  void clique_search(int depth, std::uint64_t candidates, int start, int& best) const {
    best = std::max(best, depth);
    for (int v = start; v < size(); ++v) {
      if (!((candidates >> v) & 1U)) continue;
      if (depth + 1 + std::popcount(candidates >> (v + 1)) <= best) continue;
      clique_search(depth + 1, candidates & adj_[v], v + 1, best);
    }
  }

  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::string, Vertex> index_;
};

// Link/star/perp calculus.

inline VertexSet link(const DefGraph& g, Vertex v) {
  g.check(v);
  return VertexSet(g.adjacency_bits(v));
}

inline VertexSet star(const DefGraph& g, Vertex v) { return link(g, v) | VertexSet::single(v); }

/// Common link of Δ; the empty family gives every vertex.
inline VertexSet perp(const DefGraph& g, VertexSet delta) {
  g.check(delta);
  VertexSet out = g.all();
  for (Vertex v : delta.members()) out &= link(g, v);
  return out;
}

/// Common star of Δ; equals perp(Δ) plus those c ∈ Δ with Δ ⊆ St c.
inline VertexSet perp_closed(const DefGraph& g, VertexSet delta) {
  g.check(delta);
  VertexSet out = g.all();
  for (Vertex v : delta.members()) out &= star(g, v);
  return out;
}

/// Maximal join decomposition of the induced subgraph on Δ: connected
/// components of the complement graph, ordered by least vertex.
inline std::vector<VertexSet> join_decomposition(const DefGraph& g, VertexSet delta) {
  g.check(delta);
  if (delta.empty()) throw Error(errc::empty_set, "join decomposition of the empty set");
  std::vector<VertexSet> factors;
  VertexSet remaining = delta;
  while (!remaining.empty()) {
    VertexSet comp = VertexSet::single(remaining.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      Vertex v = frontier.least();
      frontier.erase(v);
      VertexSet non_nbrs = (remaining - comp) - link(g, v) - VertexSet::single(v);
      comp |= non_nbrs;
      frontier |= non_nbrs;
    }
    factors.push_back(comp);
    remaining = remaining - comp;
  }
  return factors;
}

inline bool is_join_irreducible(const DefGraph& g, VertexSet delta) {
  return !delta.empty() && join_decomposition(g, delta).size() == 1;
}

}  // namespace raagtk
