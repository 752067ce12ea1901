#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raagtk/ball.hpp"
#include "raagtk/elements.hpp"
#include "raagtk/heap.hpp"
#include "raagtk/hyperplane.hpp"
#include "raagtk/subgroups.hpp"

namespace raagtk {

/// Vertex g·A_{Γ∖v} of the Bass-Serre tree T_v.
struct TreeVertex {
  Vertex label = 0;
  NormalForm coset;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

inline TreeVertex tree_vertex(const DefGraph& g, Vertex v, const NormalForm& a) {
  g.check(v);
  VertexSet rest = g.all();
  rest.erase(v);
  return {v, coset_rep(g, a, rest)};
}

inline TreeVertex act(const DefGraph& g, const NormalForm& k, const TreeVertex& t) {
  return tree_vertex(g, t.label, multiply(g, k, t.coset));
}

/// Number of v-hyperplanes separating a from b; the T_v distance of their cosets.
inline int tv_distance(const DefGraph& g, Vertex v, const NormalForm& a, const NormalForm& b) {
  g.check(v);
  return vertex_count(multiply(g, invert(g, a), b), v);
}

inline int tv_distance(const DefGraph& g, const TreeVertex& a, const TreeVertex& b) {
  if (a.label != b.label) throw Error(errc::precondition, "tree vertices of different trees");
  return tv_distance(g, a.label, a.coset, b.coset);
}

inline int tv_translation_length(const DefGraph& g, Vertex v, const NormalForm& a) {
  g.check(v);
  return vertex_count(cyclic_reduce(g, a).core, v);
}

inline bool fixes(const DefGraph& g, const NormalForm& k, const TreeVertex& t) { return act(g, k, t) == t; }

inline int displacement(const DefGraph& g, const NormalForm& k, const TreeVertex& t) {
  return tv_distance(g, t, act(g, k, t));
}

struct TreeArc {
  Vertex label = 0;
  TreeVertex p, q;
};

inline TreeArc tree_arc(const DefGraph& g, Vertex v, const NormalForm& a, const NormalForm& b) {
  return {v, tree_vertex(g, v, a), tree_vertex(g, v, b)};
}

inline int length(const DefGraph& g, const TreeArc& arc) { return tv_distance(g, arc.p, arc.q); }

/// Reduced word for a geodesic from p to q in the cube complex.
inline NormalForm arc_word(const DefGraph& g, const TreeArc& arc) {
  return multiply(g, invert(g, arc.p.coset), arc.q.coset);
}

/// The tree vertices along the arc, from p (index 0) to q (index length).
inline std::vector<TreeVertex> arc_vertices(const DefGraph& g, const TreeArc& arc) {
  std::vector<TreeVertex> out = {arc.p};
  NormalForm cur = arc.p.coset;
  const NormalForm w = arc_word(g, arc);
  for (Letter l : w.letters()) {
    cur = multiply(g, cur, generator(l.vertex(), l.positive()));
    if (l.vertex() == arc.label) out.push_back(tree_vertex(g, arc.label, cur));
  }
  return out;
}

inline bool fixes_arc(const DefGraph& g, const NormalForm& k, const TreeArc& arc) {
  return fixes(g, k, arc.p) && fixes(g, k, arc.q);
}

/// Pointwise stabiliser of a nontrivial arc: the stabiliser of its first and
/// last edge, b·A_{Δ(u,w)^⊥}·b^-1 with b the start of the interval between them.
inline SubgroupForm arc_stabilizer(const DefGraph& g, const TreeArc& arc) {
  const NormalForm w = arc_word(g, arc);
  const Heap heap(g, w.letters());
  const auto vs = heap.pieces_of(arc.label);
  if (vs.empty()) throw Error(errc::degenerate_arc, "arc has length zero");
  const auto split = heap.interval(vs.front(), vs.back());
  const NormalForm base = multiply(g, arc.p.coset, normalize(g, split.before));
  const VertexSet delta = support(normalize(g, split.interval));
  return reduce_conjugator(g, parabolic(base, perp(g, delta)));
}

struct AlmostStabilizer {
  std::vector<NormalForm> elements;  ///< ShortLex sorted; truncated to the ball
  int radius = 0;
};

/// D(β, s) ∩ B(radius): elements moving both endpoints by at most s.
inline AlmostStabilizer almost_stabilizer(const DefGraph& g, const TreeArc& arc, int s, int radius) {
  const int len = length(g, arc);
  if (s < 0 || 2 * s >= len) throw Error(errc::out_of_range, "need 0 <= s < length/2");
  AlmostStabilizer out;
  out.radius = radius;
  for (const auto& k : ball(g, radius))
    if (displacement(g, k, arc.p) <= s && displacement(g, k, arc.q) <= s) out.elements.push_back(k);
  return out;
}

/// β^δ: the arc with ⌊δ/2⌋ trimmed from each end.
inline TreeArc trim(const DefGraph& g, const TreeArc& arc, int delta) {
  const auto vs = arc_vertices(g, arc);
  const int n = static_cast<int>(vs.size()) - 1;
  const int t = delta / 2;
  if (2 * t > n) throw Error(errc::out_of_range, "trim exceeds arc length");
  return {arc.label, vs[static_cast<std::size_t>(t)], vs[static_cast<std::size_t>(n - t)]};
}

enum class AlmostSide { fixes_core, axial };

struct DichotomyReport {
  bool ok = true;
  std::string failure;                 ///< first violation, empty when ok
  std::vector<AlmostSide> sides;       ///< one per element
  std::optional<NormalForm> axis_root; ///< shared root of the loxodromic directions
  int elliptic = 0, loxodromic = 0;
};

/// Sort each element of D(β,δ) into one side of the almost-stabiliser
/// dichotomy: elliptic elements must fix β^δ; loxodromic ones must have a
/// single T_v-loxodromic li-component, all sharing one primitive root h
/// (up to inverse) with ℓ(h) <= δ and an axis through β^δ, the remaining
/// components fixing β^δ.
inline DichotomyReport classify_almost_stabilizer(const DefGraph& g, const TreeArc& arc, int delta,
                                                  const std::vector<NormalForm>& elements) {
  DichotomyReport rep;
  const TreeArc core = trim(g, arc, delta);
  const Vertex v = arc.label;
  auto fail = [&rep](std::string why) {
    if (rep.ok) rep.failure = std::move(why);
    rep.ok = false;
  };
  for (const auto& k : elements) {
    const std::string name = "element of length " + std::to_string(k.size());
    if (tv_translation_length(g, v, k) == 0) {
      ++rep.elliptic;
      rep.sides.push_back(AlmostSide::fixes_core);
      if (!fixes_arc(g, k, core)) fail("elliptic " + name + " does not fix the trimmed arc");
      continue;
    }
    ++rep.loxodromic;
    rep.sides.push_back(AlmostSide::axial);
    const auto li = li_components(g, k);
    std::optional<std::size_t> lox;
    NormalForm others;
    for (std::size_t i = 0; i < li.components.size(); ++i) {
      if (li.supports[i].contains(v)) {
        if (lox) fail("two loxodromic components");
        lox = i;
      } else {
        others = multiply(g, others, li.components[i]);
      }
    }
    if (!lox) {
      fail("loxodromic " + name + " without loxodromic component");
      continue;
    }
    NormalForm h = primitive_root(g, li.components[*lox]).root;
    if (const NormalForm hi = invert(g, h); hi < h) h = hi;
    if (!rep.axis_root) rep.axis_root = h;
    else if (*rep.axis_root != h) fail("loxodromic elements with different axes");
    const int lh = tv_translation_length(g, v, h);
    if (lh > delta) fail("root translation length exceeds delta");
    if (displacement(g, h, core.p) != lh || displacement(g, h, core.q) != lh)
      fail("root axis does not contain the trimmed arc");
    if (!fixes_arc(g, others, core)) fail("elliptic part of " + name + " moves the trimmed arc");
  }
  return rep;
}

inline std::string format(const DefGraph& g, const TreeVertex& t) {
  return format(g, t.coset, ".") + "·A[" + g.name(t.label) + "^c]";
}

}  // namespace raagtk
