#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "raagtk/error.hpp"
#include "raagtk/word.hpp"

namespace raagtk {

/// Γ(g): labels on an axis of g, i.e. the support of its cyclic core.
inline VertexSet gamma(const DefGraph& g, const NormalForm& a) {
  return support(cyclic_reduce(g, a).core);
}

inline bool is_label_irreducible(const DefGraph& g, const NormalForm& a) {
  return !a.empty() && is_join_irreducible(g, gamma(g, a));
}

struct LIDecomposition {
  std::vector<NormalForm> components;
  std::vector<VertexSet> supports;
};

/// Letters of a with vertex in s, normalised.
inline NormalForm restrict_to(const DefGraph& g, const NormalForm& a, VertexSet s) {
  Word w;
  for (Letter l : a.letters())
    if (s.contains(l.vertex())) w.push_back(l);
  return normalize(g, w);
}

inline LIDecomposition li_components(const DefGraph& g, const NormalForm& a) {
  if (a.empty()) throw Error(errc::identity_input, "identity has no label-irreducible components");
  const auto cd = cyclic_reduce(g, a);
  LIDecomposition out;
  for (VertexSet f : join_decomposition(g, support(cd.core))) {
    out.components.push_back(conjugate(g, cd.conjugator, restrict_to(g, cd.core, f)));
    out.supports.push_back(f);
  }
  return out;
}

struct Root {
  NormalForm root;
  int exponent = 1;
};

/// a = root^exponent with exponent maximal.
inline Root primitive_root(const DefGraph& g, const NormalForm& a) {
  if (a.empty()) throw Error(errc::identity_input, "identity has no primitive root");
  const auto cd = cyclic_reduce(g, a);
  const Word& core = cd.core.letters();
  std::vector<int> count(static_cast<std::size_t>(g.size()), 0);
  for (Letter l : core) ++count[static_cast<std::size_t>(l.vertex())];
  int d = 0;
  for (int c : count) d = std::gcd(d, c);

  // A cyclically reduced n-th power is the n-fold concatenation of its root,
  // so the root is the heap prefix holding the first count/n pieces per label.
  for (int n = d; n > 1; --n) {
    if (d % n != 0) continue;
    std::vector<int> seen(count.size(), 0);
    Word cand;
    for (Letter l : core) {
      auto& s = seen[static_cast<std::size_t>(l.vertex())];
      if (s < count[static_cast<std::size_t>(l.vertex())] / n) cand.push_back(l);
      ++s;
    }
    const NormalForm r = normalize(g, cand);
    if (power(g, r, n) == cd.core) return {conjugate(g, cd.conjugator, r), n};
  }
  return {a, 1};
}

inline bool commutes(const DefGraph& g, const NormalForm& a, const NormalForm& b) {
  return multiply(g, a, b) == multiply(g, b, a);
}

/// Z(g) = x·(⟨h_1⟩ × … × ⟨h_k⟩ × A_Δ)·x^-1.
struct CentralizerForm {
  NormalForm conjugator;
  std::vector<NormalForm> cyclic_roots;
  VertexSet parabolic_support;
};

inline CentralizerForm centralizer(const DefGraph& g, const NormalForm& a) {
  if (a.empty()) throw Error(errc::identity_input, "centralizer of the identity is the whole group");
  const auto cd = cyclic_reduce(g, a);
  CentralizerForm cf;
  cf.conjugator = cd.conjugator;
  for (const auto& c : li_components(g, cd.core).components) cf.cyclic_roots.push_back(primitive_root(g, c).root);
  cf.parabolic_support = perp(g, support(cd.core));
  return cf;
}

namespace detail {

/// h ∈ x·(⟨r_1⟩ × … × ⟨r_k⟩ × A_Δ)·x^-1, assuming the supports of the r_i and
/// Δ are pairwise joined (so the product is direct and projections apply).
inline bool product_member(const DefGraph& g, const NormalForm& x, const std::vector<NormalForm>& roots,
                           VertexSet delta, const NormalForm& h) {
  const NormalForm k = multiply(g, multiply(g, invert(g, x), h), x);
  VertexSet allowed = delta;
  for (const auto& r : roots) allowed |= support(r);
  if (!support(k).subset_of(allowed)) return false;
  for (const auto& r : roots) {
    const NormalForm proj = restrict_to(g, k, support(r));
    if (proj.size() % r.size() != 0) return false;
    const long m = static_cast<long>(proj.size() / r.size());
    if (power(g, r, m) != proj && power(g, r, -m) != proj) return false;
  }
  return true;
}

/// Checks the pairwise-orthogonal, cyclically reduced shape shared by
/// centralizer and semi-parabolic forms; returns the first violation or "".
inline std::string product_shape_violation(const DefGraph& g, const std::vector<NormalForm>& roots,
                                           VertexSet delta) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& r = roots[i];
    if (r.empty()) return "root " + std::to_string(i) + " is trivial";
    if (!is_cyclically_reduced(g, r)) return "root " + std::to_string(i) + " is not cyclically reduced";
    if (!is_join_irreducible(g, support(r))) return "root " + std::to_string(i) + " is not label-irreducible";
    if (primitive_root(g, r).exponent != 1) return "root " + std::to_string(i) + " is a proper power";
    if (!support(r).subset_of(perp(g, delta))) return "root " + std::to_string(i) + " is not orthogonal to the support";
    for (std::size_t j = 0; j < i; ++j)
      if (!support(r).subset_of(perp(g, support(roots[j]))))
        return "roots " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal";
  }
  return "";
}

}  // namespace detail

inline bool membership_centralizer(const DefGraph& g, const CentralizerForm& cf, const NormalForm& h) {
  if (auto why = detail::product_shape_violation(g, cf.cyclic_roots, cf.parabolic_support); !why.empty())
    throw Error(errc::malformed, "malformed centralizer form: " + why);
  return detail::product_member(g, cf.conjugator, cf.cyclic_roots, cf.parabolic_support, h);
}

/// Breadth-first search over products of at most budget factors from
/// {g, g^-1, h, h^-1} for k with Γ(g) ∪ Γ(h) ⊆ Γ(k). nullopt only means the
/// budget ran out.
inline std::optional<NormalForm> increasing_labels_search(const DefGraph& g, const NormalForm& a,
                                                          const NormalForm& b, int budget) {
  const VertexSet want = gamma(g, a) | gamma(g, b);
  const std::vector<NormalForm> gens = {a, invert(g, a), b, invert(g, b)};
  std::set<NormalForm> seen = {NormalForm{}};
  std::vector<NormalForm> layer = {NormalForm{}};
  for (int depth = 1; depth <= budget; ++depth) {
    std::vector<NormalForm> next;
    for (const auto& p : layer)
      for (const auto& s : gens) {
        NormalForm k = multiply(g, p, s);
        if (!seen.insert(k).second) continue;
        if (want.subset_of(gamma(g, k))) return k;
        next.push_back(std::move(k));
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace raagtk
