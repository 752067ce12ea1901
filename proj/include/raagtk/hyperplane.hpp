#pragma once

#include <algorithm>
#include <vector>

#include "raagtk/word.hpp"

namespace raagtk {

/// Canonical representative of the coset a·A_S: strip last letters with
/// vertex in S until none is left.
inline NormalForm coset_rep(const DefGraph& g, const NormalForm& a, VertexSet s) {
  const Word& w = a.letters();
  std::vector<char> gone(w.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (gone[i] || !s.contains(w[i].vertex())) continue;
      bool last = true;
      for (std::size_t j = i + 1; j < w.size() && last; ++j)
        last = gone[j] || !dependent(g, w[i], w[j]);
      if (last) {
        gone[i] = 1;
        changed = true;
      }
    }
  }
  Word kept;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!gone[i]) kept.push_back(w[i]);
  return NormalForm::assume_canonical(std::move(kept));
}

/// A hyperplane of the universal cover of the Salvetti complex: the label v
/// together with the canonical representative of base·A_{lk v}, where base is
/// the start of a positively oriented dual v-edge.
struct Hyperplane {
  Vertex label = 0;
  NormalForm base;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.base < b.base;
  }
};

struct HyperplaneHash {
  std::size_t operator()(const Hyperplane& h) const noexcept {
    return NormalFormHash{}(h.base) * 31 + static_cast<std::size_t>(h.label);
  }
};

inline Hyperplane make_hyperplane(const DefGraph& g, Vertex v, const NormalForm& base) {
  return {v, coset_rep(g, base, link(g, v))};
}

/// Hyperplane dual to the edge from p to p·l.
inline Hyperplane dual_hyperplane(const DefGraph& g, const NormalForm& p, Letter l) {
  const Vertex v = l.vertex();
  if (l.positive()) return make_hyperplane(g, v, p);
  return make_hyperplane(g, v, multiply(g, p, generator(v, false)));
}

/// The hyperplanes crossed by the path 1 -> w, in order. For a reduced w they
/// are pairwise distinct.
inline std::vector<Hyperplane> path_hyperplanes(const DefGraph& g, const Word& w,
                                                const NormalForm& start = {}) {
  std::vector<Hyperplane> out;
  out.reserve(w.size());
  NormalForm p = start;
  for (Letter l : w) {
    out.push_back(dual_hyperplane(g, p, l));
    p = multiply(g, p, generator(l.vertex(), l.positive()));
  }
  return out;
}

inline std::vector<Hyperplane> geodesic_hyperplanes(const DefGraph& g, const NormalForm& a) {
  return path_hyperplanes(g, a.letters());
}

/// W(a|b): hyperplanes separating a from b.
inline std::vector<Hyperplane> separating_hyperplanes(const DefGraph& g, const NormalForm& a,
                                                      const NormalForm& b) {
  return path_hyperplanes(g, multiply(g, invert(g, a), b).letters(), a);
}

inline Hyperplane act(const DefGraph& g, const NormalForm& k, const Hyperplane& h) {
  return make_hyperplane(g, h.label, multiply(g, k, h.base));
}

inline bool fixes(const DefGraph& g, const NormalForm& k, const Hyperplane& h) {
  return act(g, k, h) == h;
}

inline bool separates(const DefGraph& g, const Hyperplane& h, const NormalForm& a, const NormalForm& b) {
  auto hs = separating_hyperplanes(g, a, b);
  return std::find(hs.begin(), hs.end(), h) != hs.end();
}

inline std::string format(const DefGraph& g, const Hyperplane& h) {
  return g.name(h.label) + "@" + format(g, h.base, ".");
}

}  // namespace raagtk
