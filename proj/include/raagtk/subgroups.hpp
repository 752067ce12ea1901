#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "raagtk/ball.hpp"
#include "raagtk/elements.hpp"
#include "raagtk/error.hpp"
#include "raagtk/hyperplane.hpp"

namespace raagtk {

enum class SubgroupKind { parabolic, semi_parabolic };

inline const char* to_string(SubgroupKind k) {
  return k == SubgroupKind::parabolic ? "parabolic" : "semi_parabolic";
}

/// conjugator·(⟨a_1⟩ × … × ⟨a_k⟩ × A_Δ)·conjugator^-1; a parabolic has no roots.
struct SubgroupForm {
  SubgroupKind kind = SubgroupKind::parabolic;
  NormalForm conjugator;
  std::vector<NormalForm> abelian_roots;
  VertexSet support;

  friend bool operator==(const SubgroupForm&, const SubgroupForm&) = default;
};

inline SubgroupForm parabolic(const NormalForm& conj, VertexSet delta) {
  return {SubgroupKind::parabolic, conj, {}, delta};
}

struct Validation {
  bool ok = true;
  std::string diagnostic;
};

inline Validation validate(const DefGraph& g, const SubgroupForm& sf) {
  if (!sf.support.subset_of(g.all())) return {false, "support is not a subset of the graph"};
  check_letters(g, sf.conjugator.letters());
  if (sf.kind == SubgroupKind::parabolic && !sf.abelian_roots.empty())
    return {false, "parabolic form carries abelian roots"};
  for (const auto& r : sf.abelian_roots) check_letters(g, r.letters());
  if (auto why = detail::product_shape_violation(g, sf.abelian_roots, sf.support); !why.empty())
    return {false, why};
  return {};
}

namespace detail {
inline bool member_unchecked(const DefGraph& g, const SubgroupForm& sf, const NormalForm& h) {
  return product_member(g, sf.conjugator, sf.abelian_roots, sf.support, h);
}
inline void require_valid(const DefGraph& g, const SubgroupForm& sf) {
  if (auto v = validate(g, sf); !v.ok) throw Error(errc::invalid_subgroup, "invalid subgroup: " + v.diagnostic);
}
}  // namespace detail

inline bool member(const DefGraph& g, const SubgroupForm& sf, const NormalForm& h) {
  detail::require_valid(g, sf);
  return detail::member_unchecked(g, sf, h);
}

/// Generators: x·a_i·x^-1 and x·v·x^-1 for v ∈ Δ.
inline std::vector<NormalForm> generators(const DefGraph& g, const SubgroupForm& sf) {
  std::vector<NormalForm> out;
  for (const auto& r : sf.abelian_roots) out.push_back(conjugate(g, sf.conjugator, r));
  for (Vertex v : sf.support.members()) out.push_back(conjugate(g, sf.conjugator, generator(v)));
  return out;
}

/// Same subgroup, decided by mutual generator membership.
inline bool same_subgroup(const DefGraph& g, const SubgroupForm& a, const SubgroupForm& b) {
  for (const auto& x : generators(g, a))
    if (!detail::member_unchecked(g, b, x)) return false;
  for (const auto& x : generators(g, b))
    if (!detail::member_unchecked(g, a, x)) return false;
  return true;
}

/// Drop trailing conjugator letters that normalise the base subgroup.
inline SubgroupForm reduce_conjugator(const DefGraph& g, SubgroupForm sf) {
  VertexSet used = sf.support;
  for (const auto& r : sf.abelian_roots) used |= support(r);
  sf.conjugator = coset_rep(g, sf.conjugator, sf.support | perp(g, used));
  return sf;
}

namespace detail {

/// Try to describe the subgroup generated by `found` (all of which lie in both
/// a and b) with conjugator x.
inline std::optional<SubgroupForm> fit_with_conjugator(const DefGraph& g, const SubgroupForm& a,
                                                       const SubgroupForm& b,
                                                       const std::vector<NormalForm>& found,
                                                       const NormalForm& x) {
  const NormalForm xi = invert(g, x);
  VertexSet delta;
  for (Vertex v = 0; v < g.size(); ++v) {
    const NormalForm c = conjugate(g, x, generator(v));
    if (member_unchecked(g, a, c) && member_unchecked(g, b, c)) delta.insert(v);
  }
  std::vector<NormalForm> roots;
  for (const auto& k : found) {
    const NormalForm kk = multiply(g, multiply(g, xi, k), x);
    if (support(kk).subset_of(delta)) continue;
    if (!is_cyclically_reduced(g, kk)) return std::nullopt;
    NormalForm r = primitive_root(g, kk).root;
    const NormalForm ri = invert(g, r);
    if (ri < r) r = ri;
    bool placed = false;
    for (const auto& q : roots) {
      if (support(q) == support(r)) {
        if (q != r) return std::nullopt;
        placed = true;
      }
    }
    if (!placed) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](const NormalForm& p, const NormalForm& q) {
    return support(p) < support(q);
  });
  SubgroupForm cand{roots.empty() ? SubgroupKind::parabolic : SubgroupKind::semi_parabolic, x, roots, delta};
  if (!validate(g, cand).ok) return std::nullopt;
  for (const auto& gen : generators(g, cand))
    if (!member_unchecked(g, a, gen) || !member_unchecked(g, b, gen)) return std::nullopt;
  for (const auto& k : found)
    if (!member_unchecked(g, cand, k)) return std::nullopt;
  return reduce_conjugator(g, cand);
}

}  // namespace detail

/// Intersection of two semi-parabolic subgroups, reconstructed from the
/// label-irreducible elements of length <= radius lying in both. The answer
/// is exact for the subgroup those elements generate; a radius too small to
/// expose a consistent generating set raises radius_too_small.
inline SubgroupForm intersect(const DefGraph& g, const SubgroupForm& a, const SubgroupForm& b, int radius) {
  detail::require_valid(g, a);
  detail::require_valid(g, b);
  std::vector<NormalForm> found;
  for (const auto& k : ball(g, radius))
    if (is_label_irreducible(g, k) && detail::member_unchecked(g, a, k) && detail::member_unchecked(g, b, k))
      found.push_back(k);
  if (found.empty()) return parabolic({}, {});

  std::vector<NormalForm> first = {NormalForm{}, a.conjugator, b.conjugator};
  std::set<NormalForm> rest;
  for (const auto& k : found) rest.insert(cyclic_reduce(g, k).conjugator);
  for (std::size_t i = 0; i < found.size() && i < 16; ++i)
    for (std::size_t j = i + 1; j < found.size() && j < 16; ++j)
      if (auto k = increasing_labels_search(g, found[i], found[j], 3))
        rest.insert(cyclic_reduce(g, *k).conjugator);

  std::set<NormalForm> tried;
  auto attempt = [&](const NormalForm& x) -> std::optional<SubgroupForm> {
    if (!tried.insert(x).second) return std::nullopt;
    return detail::fit_with_conjugator(g, a, b, found, x);
  };
  for (const auto& x : first)
    if (auto r = attempt(x)) return *r;
  for (const auto& x : rest)
    if (auto r = attempt(x)) return *r;
  throw Error(errc::radius_too_small,
              "no consistent generating set among elements of length <= " + std::to_string(radius));
}

/// For parabolic sf with g·core(h)·g^-1 ∈ sf: every g·a_i·g^-1, a_i a letter
/// of the core, lies in sf as well.
inline bool parabolic_direction_check(const DefGraph& g, const NormalForm& h, const NormalForm& x,
                                      const SubgroupForm& sf) {
  detail::require_valid(g, sf);
  if (sf.kind != SubgroupKind::parabolic) throw Error(errc::precondition, "subgroup is not parabolic");
  const NormalForm core = cyclic_reduce(g, h).core;
  if (!detail::member_unchecked(g, sf, conjugate(g, x, core)))
    throw Error(errc::precondition, "conjugated core does not lie in the subgroup");
  for (Letter l : core.letters())
    if (!detail::member_unchecked(g, sf, conjugate(g, x, generator(l.vertex(), l.positive())))) return false;
  return true;
}

// Literal syntax: `conj=W roots=W1,W2 support=a,b [kind=parabolic|semi_parabolic]`,
// letters inside a word separated by '.'.

inline SubgroupForm parse_subgroup(const DefGraph& g, std::string_view text) {
  SubgroupForm sf;
  bool kind_given = false;
  std::istringstream in{std::string(text)};
  for (std::string field; in >> field;) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(errc::parse_error, "subgroup field without '=': " + field);
    const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "conj") {
      sf.conjugator = parse_element(g, val);
    } else if (key == "roots") {
      std::string part;
      std::istringstream rs(val);
      while (std::getline(rs, part, ','))
        if (!part.empty()) sf.abelian_roots.push_back(parse_element(g, part));
    } else if (key == "support") {
      sf.support = g.parse_set(val);
    } else if (key == "kind") {
      if (val == "parabolic") sf.kind = SubgroupKind::parabolic;
      else if (val == "semi_parabolic") sf.kind = SubgroupKind::semi_parabolic;
      else throw Error(errc::parse_error, "unknown subgroup kind " + val);
      kind_given = true;
    } else {
      throw Error(errc::parse_error, "unknown subgroup field " + key);
    }
  }
  if (!kind_given) sf.kind = sf.abelian_roots.empty() ? SubgroupKind::parabolic : SubgroupKind::semi_parabolic;
  return sf;
}

inline std::string format(const DefGraph& g, const SubgroupForm& sf) {
  std::string out = "conj=" + format(g, sf.conjugator, ".") + " roots=";
  for (std::size_t i = 0; i < sf.abelian_roots.size(); ++i)
    out += (i ? "," : "") + format(g, sf.abelian_roots[i], ".");
  std::string s = g.format_set(sf.support);
  return out + " support=" + s.substr(1, s.size() - 2);
}

}  // namespace raagtk
