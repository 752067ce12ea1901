#pragma once

// Brute-force reference implementations. They share no algorithmic code with
// the library beyond multiplication where a group operation is unavoidable.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "raagtk/ball.hpp"
#include "raagtk/hyperplane.hpp"
#include "raagtk/word.hpp"

namespace raagtk::verify {

// ---------------------------------------------------------------------------
// Normal forms by closure under shuffles and cancellations.
//
// Words of length <= L are numbered; shuffles of adjacent commuting letters
// are merged with union-find, and each class inherits the ShortLex-least word
// reachable from it through a cancellation. For a RAAG that least word is the
// least reduced word for the element, which the canonical form must equal.

class ShuffleOracle {
public:
  ShuffleOracle(const DefGraph& g, int max_len) : g_(g), max_len_(max_len), base_(2 * g.size()) {
    offset_.push_back(0);
    std::uint64_t count = 1;
    for (int len = 0; len <= max_len; ++len) {
      offset_.push_back(offset_.back() + count);
      count *= static_cast<std::uint64_t>(base_);
    }
    const std::size_t total = static_cast<std::size_t>(offset_.back());
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), 0);
    best_.assign(total, kNone);

    for (int len = 0; len <= max_len; ++len) {
      const std::uint64_t lo = offset_[static_cast<std::size_t>(len)], hi = offset_[static_cast<std::size_t>(len + 1)];
      for (std::uint64_t id = lo; id < hi; ++id) {
        const Word w = decode(id);
        for (int i = 0; i + 1 < len; ++i) {
          if (dependent(g_, w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)])) continue;
          Word s = w;
          std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
          unite(id, encode(s));
        }
      }
      // Each class starts with its least member, then improves through
      // cancellations into already finished shorter classes.
      for (std::uint64_t id = lo; id < hi; ++id) {
        auto& b = best_[find(id)];
        if (b == kNone || id < b) b = id;
      }
      for (std::uint64_t id = lo; id < hi; ++id) {
        const Word w = decode(id);
        for (int i = 0; i + 1 < len; ++i) {
          if (w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(i + 1)].inverse()) continue;
          Word s = w;
          s.erase(s.begin() + i, s.begin() + i + 2);
          const std::uint64_t cand = best_[find(encode(s))];
          auto& b = best_[find(id)];
          if (shortlex_less(cand, b)) b = cand;
        }
      }
    }
  }

  std::uint64_t word_count() const { return offset_.back(); }

  Word least_equivalent(const Word& w) { return decode(best_[find(encode(w))]); }

  Word decode(std::uint64_t id) const {
    int len = 0;
    while (offset_[static_cast<std::size_t>(len + 1)] <= id) ++len;
    std::uint64_t r = id - offset_[static_cast<std::size_t>(len)];
    Word w(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = Letter{static_cast<std::uint8_t>(r % static_cast<std::uint64_t>(base_))};
      r /= static_cast<std::uint64_t>(base_);
    }
    return w;
  }

  std::uint64_t encode(const Word& w) const {
    std::uint64_t r = 0;
    for (Letter l : w) r = r * static_cast<std::uint64_t>(base_) + l.code;
    return offset_[w.size()] + r;
  }

private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  // Ids are ShortLex ordered: length blocks ascend and the first letter is
  // the most significant digit.
  static bool shortlex_less(std::uint64_t a, std::uint64_t b) { return a < b; }

  std::uint64_t find(std::uint64_t x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  const DefGraph& g_;
  int max_len_;
  int base_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint64_t> parent_;
  std::vector<std::uint64_t> best_;
};

// ---------------------------------------------------------------------------
// Medians by halfspace majority: W(1|m) consists of the hyperplanes that
// separate 1 from at least two of x, y, z, and an element is determined by
// that set.

class MajorityMedianOracle {
public:
  MajorityMedianOracle(const DefGraph& g, int lookup_radius) : g_(g) {
    for (const auto& p : ball(g, lookup_radius)) by_set_.emplace(walls(p), p);
  }

  std::vector<int> walls(const NormalForm& p) {
    std::vector<int> ids;
    for (const auto& h : geodesic_hyperplanes(g_, p)) {
      auto [it, fresh] = intern_.try_emplace(h, static_cast<int>(intern_.size()));
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  static std::vector<int> majority(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
    std::vector<int> all;
    all.reserve(a.size() + b.size() + c.size());
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      if (all[i] == all[i + 1] && (out.empty() || out.back() != all[i])) out.push_back(all[i]);
    return out;
  }

  std::optional<NormalForm> lookup(const std::vector<int>& ws) const {
    auto it = by_set_.find(ws);
    if (it == by_set_.end()) return std::nullopt;
    return it->second;
  }

private:
  const DefGraph& g_;
  std::unordered_map<Hyperplane, int, HyperplaneHash> intern_;
  std::map<std::vector<int>, NormalForm> by_set_;
};

// ---------------------------------------------------------------------------
// Small brute-force helpers.

/// Least core length over conjugates h·g·h^-1 with |h| <= radius.
inline std::size_t min_conjugate_length(const DefGraph& g, const NormalForm& a, int radius) {
  std::size_t best = a.size();
  for (const auto& h : ball(g, radius)) best = std::min(best, conjugate(g, h, a).size());
  return best;
}

/// Largest n with h^n = a for some |h| <= |a|.
inline int max_power_by_search(const DefGraph& g, const NormalForm& a) {
  int best = 1;
  for (const auto& h : ball(g, static_cast<int>(a.size()))) {
    if (h.empty()) continue;
    NormalForm p = h;
    for (int n = 2; n <= static_cast<int>(a.size()) + 2; ++n) {
      p = multiply(g, p, h);
      if (p == a) best = std::max(best, n);
    }
  }
  return best;
}

/// Products of at most k generators (and inverses).
inline std::vector<NormalForm> generated_ball(const DefGraph& g, const std::vector<NormalForm>& gens, int k) {
  std::vector<NormalForm> sym;
  for (const auto& x : gens) {
    sym.push_back(x);
    sym.push_back(invert(g, x));
  }
  std::set<NormalForm> seen = {NormalForm{}};
  std::vector<NormalForm> layer = {NormalForm{}};
  for (int d = 0; d < k; ++d) {
    std::vector<NormalForm> next;
    for (const auto& p : layer)
      for (const auto& s : sym) {
        NormalForm q = multiply(g, p, s);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    layer = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// T_v distance from 1 to h by 0-1 breadth-first search over the ball of the
/// Cayley graph, where only v-edges cost one, ending anywhere in h·A_{Γ∖v}.
inline int tree_distance_by_bfs(const DefGraph& g, Vertex v, const NormalForm& h, int radius) {
  std::map<NormalForm, int> dist;
  std::deque<NormalForm> dq = {NormalForm{}};
  dist[NormalForm{}] = 0;
  VertexSet rest = g.all();
  rest.erase(v);
  const NormalForm target = coset_rep(g, h, rest);
  while (!dq.empty()) {
    NormalForm x = dq.front();
    dq.pop_front();
    const int dx = dist[x];
    if (coset_rep(g, x, rest) == target) return dx;
    for (Letter l : all_letters(g)) {
      NormalForm y = multiply(g, x, generator(l.vertex(), l.positive()));
      if (y.size() > static_cast<std::size_t>(radius)) continue;
      const int w = l.vertex() == v ? 1 : 0;
      auto it = dist.find(y);
      if (it != dist.end() && it->second <= dx + w) continue;
      dist[y] = dx + w;
      if (w == 0) dq.push_front(y);
      else dq.push_back(y);
    }
  }
  return -1;
}

}  // namespace raagtk::verify
