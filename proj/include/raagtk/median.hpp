#pragma once

#include <set>
#include <vector>

#include "raagtk/error.hpp"
#include "raagtk/word.hpp"

namespace raagtk {

/// Cubical median: walk from x along letters that are first letters of both
/// x^-1 y and x^-1 z.
inline NormalForm median(const DefGraph& g, const NormalForm& x, const NormalForm& y, const NormalForm& z) {
  const NormalForm xi = invert(g, x);
  return multiply(g, x, common_prefix(g, multiply(g, xi, y), multiply(g, xi, z)));
}

using Tuple = std::vector<NormalForm>;

struct ClosureResult {
  std::vector<Tuple> elements;  ///< sorted
  bool truncated = false;
};

inline constexpr std::size_t default_closure_cap = 100'000;

/// Least subset containing s and closed under the coordinatewise median, or a
/// truncated partial closure once it grows beyond cap.
inline ClosureResult subalgebra_closure(const DefGraph& g, const std::vector<Tuple>& s,
                                        std::size_t cap = default_closure_cap) {
  ClosureResult r;
  if (s.empty()) return r;
  const std::size_t arity = s.front().size();
  for (const auto& t : s)
    if (t.size() != arity) throw Error(errc::arity_mismatch, "tuples of different arity");

  auto less = [](const Tuple& a, const Tuple& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::set<Tuple, decltype(less)> seen(less);
  std::vector<Tuple> all;
  for (const auto& t : s)
    if (seen.insert(t).second) all.push_back(t);

  auto med = [&](const Tuple& a, const Tuple& b, const Tuple& c) {
    Tuple m(arity);
    for (std::size_t k = 0; k < arity; ++k) m[k] = median(g, a[k], b[k], c[k]);
    return m;
  };

  // Semi-naive fixpoint: each round only forms triples touching the newest layer.
  std::size_t old_end = 0;
  while (old_end < all.size() && !r.truncated) {
    const std::size_t new_begin = old_end, end = all.size();
    std::vector<Tuple> fresh;
    for (std::size_t i = 0; i < end && !r.truncated; ++i)
      for (std::size_t j = i; j < end && !r.truncated; ++j)
        for (std::size_t k = std::max(j, new_begin); k < end; ++k) {
          Tuple m = med(all[i], all[j], all[k]);
          if (seen.insert(m).second) {
            fresh.push_back(std::move(m));
            if (seen.size() > cap) {
              r.truncated = true;
              break;
            }
          }
        }
    old_end = end;
    for (auto& t : fresh) all.push_back(std::move(t));
  }
  r.elements.assign(seen.begin(), seen.end());
  return r;
}

}  // namespace raagtk
