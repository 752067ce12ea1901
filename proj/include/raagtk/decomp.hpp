#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagtk/elements.hpp"
#include "raagtk/heap.hpp"
#include "raagtk/hyperplane.hpp"
#include "raagtk/subgroups.hpp"
#include "raagtk/tree.hpp"

namespace raagtk {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Constants. Only q = 1 (A_Γ acting on its own cube complex) is executed, but
// the formulas take q.

inline BigInt pow_big(BigInt b, unsigned e) {
  BigInt r = 1;
  while (e--) r *= b;
  return r;
}

/// Bound on the number of pieces of a good decomposition: q^q·max(7,2q)^{q²V}.
inline BigInt good_piece_bound(int q, int vertices) {
  return pow_big(q, static_cast<unsigned>(q)) *
         pow_big(std::max(7, 2 * q), static_cast<unsigned>(q * q * vertices));
}

/// N_q, which coincides with the piece bound.
inline BigInt n_q(int q, int vertices) { return good_piece_bound(q, vertices); }

/// L = (N^V + 1)(2NV + 1) + 2q·N^V.
inline BigInt chain_length_bound(int q, int vertices) {
  const BigInt n = n_q(q, vertices);
  const BigInt nv = pow_big(n, static_cast<unsigned>(vertices));
  return (nv + 1) * (2 * n * vertices + 1) + 2 * q * nv;
}

inline void require_reduced(const DefGraph& g, const Word& w) {
  if (normalize(g, w).size() != w.size()) throw Error(errc::unreduced_input, "word is not reduced");
}

// ---------------------------------------------------------------------------
// Hyperplane pairs.

/// Two disjoint hyperplanes u, w together with a geodesic word from base that
/// crosses exactly W(u,w): u first, w last, everything else between them.
struct HyperplanePair {
  NormalForm base;
  Word word;
  Hyperplane u, w;
};

inline HyperplanePair make_pair(const DefGraph& g, const NormalForm& base, const Word& word) {
  check_letters(g, word);
  if (word.size() < 2) throw Error(errc::invalid_pair, "a pair needs two distinct hyperplanes");
  if (normalize(g, word).size() != word.size()) throw Error(errc::invalid_pair, "word is not reduced");
  if (!Heap(g, word).has_unique_ends())
    throw Error(errc::invalid_pair, "some crossed hyperplane does not separate the end hyperplanes");
  const auto hs = path_hyperplanes(g, word, base);
  return {base, word, hs.front(), hs.back()};
}

/// The pair spanned by pieces i <= j of a geodesic word read from start.
inline HyperplanePair pair_from_pieces(const DefGraph& g, const NormalForm& start, const Word& word, std::size_t i,
                                       std::size_t j) {
  const Heap heap(g, word);
  const auto s = heap.interval(i, j);
  return make_pair(g, multiply(g, start, normalize(g, s.before)), s.interval);
}

struct DeltaInvariants {
  VertexSet delta;
  int delta_size = 0;
  std::vector<int> d;  ///< per vertex, hyperplanes strictly between u and w
};

inline DeltaInvariants delta_invariants(const DefGraph& g, const HyperplanePair& p) {
  if (p.word.size() < 2) throw Error(errc::invalid_pair, "degenerate pair");
  DeltaInvariants r;
  r.d.assign(static_cast<std::size_t>(g.size()), 0);
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    r.delta.insert(p.word[i].vertex());
    if (i > 0 && i + 1 < p.word.size()) ++r.d[static_cast<std::size_t>(p.word[i].vertex())];
  }
  r.delta_size = r.delta.size();
  return r;
}

// ---------------------------------------------------------------------------
// Decent geodesics. With a single vertex orbit, v is witnessed on α when some
// subpath α[i, j) has v ∈ Γ of the element it spells.

struct DecentWitness {
  Vertex v;
  std::size_t from, to;
};

struct DecencyReport {
  bool decent = true;
  std::vector<DecentWitness> witnesses;  ///< one per label, graph order
  std::vector<Vertex> missing;
};

inline DecencyReport is_decent(const DefGraph& g, const Word& alpha) {
  require_reduced(g, alpha);
  VertexSet labels;
  for (Letter l : alpha) labels.insert(l.vertex());
  DecencyReport r;
  for (Vertex v : labels.members()) {
    std::optional<DecentWitness> found;
    // Shortest subpaths first, so the witness is the most local one.
    for (std::size_t len = 1; len <= alpha.size() && !found; ++len)
      for (std::size_t i = 0; i + len <= alpha.size() && !found; ++i) {
        const Word sub(alpha.begin() + static_cast<std::ptrdiff_t>(i),
                       alpha.begin() + static_cast<std::ptrdiff_t>(i + len));
        if (gamma(g, normalize(g, sub)).contains(v)) found = DecentWitness{v, i, i + len};
      }
    if (found) {
      r.witnesses.push_back(*found);
    } else {
      r.decent = false;
      r.missing.push_back(v);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Good decompositions.

enum class PieceTag { edge, good, decent };

inline const char* to_string(PieceTag t) {
  switch (t) {
    case PieceTag::edge: return "edge";
    case PieceTag::good: return "good";
    case PieceTag::decent: return "decent";
  }
  return "?";
}

struct Piece {
  std::size_t begin = 0, end = 0;  ///< letters [begin, end) of the word
  PieceTag tag = PieceTag::edge;
};

struct Decomposition {
  std::vector<Piece> pieces;
  BigInt bound;
  bool within_bound = true;
};

/// Per-label edge counts on α[b, e).
inline std::vector<int> label_counts(const DefGraph& g, const Word& w, std::size_t b, std::size_t e) {
  std::vector<int> c(static_cast<std::size_t>(g.size()), 0);
  for (std::size_t i = b; i < e; ++i) ++c[static_cast<std::size_t>(w[i].vertex())];
  return c;
}

/// Excellent: length >= 2 and no label crossed exactly once.
inline bool is_excellent(const DefGraph& g, const Word& w, std::size_t b, std::size_t e) {
  if (e - b < 2) return false;
  for (int c : label_counts(g, w, b, e))
    if (c == 1) return false;
  return true;
}

/// Good: every edge lies in an excellent subsegment.
inline bool is_good(const DefGraph& g, const Word& w, std::size_t b, std::size_t e) {
  if (e - b < 2) return false;
  std::vector<char> covered(e - b, 0);
  for (std::size_t i = b; i < e; ++i) {
    std::vector<int> c(static_cast<std::size_t>(g.size()), 0);
    int ones = 0;
    for (std::size_t j = i; j < e; ++j) {
      int& k = c[static_cast<std::size_t>(w[j].vertex())];
      ++k;
      if (k == 1) ++ones;
      if (k == 2) --ones;
      if (ones == 0 && j > i)
        for (std::size_t t = i; t <= j; ++t) covered[t - b] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

namespace detail {
inline void decompose_good_range(const DefGraph& g, const Word& w, std::size_t b, std::size_t e,
                                 std::vector<Piece>& out) {
  if (e <= b) return;
  if (e - b == 1) {
    out.push_back({b, e, PieceTag::edge});
    return;
  }
  if (is_good(g, w, b, e)) {
    out.push_back({b, e, PieceTag::good});
    return;
  }
  // Not good, so some label is crossed exactly once; cut at the least one.
  const auto c = label_counts(g, w, b, e);
  Vertex cut_label = -1;
  for (Vertex v = 0; v < g.size() && cut_label < 0; ++v)
    if (c[static_cast<std::size_t>(v)] == 1) cut_label = v;
  std::size_t at = b;
  while (w[at].vertex() != cut_label) ++at;
  decompose_good_range(g, w, b, at, out);
  out.push_back({at, at + 1, PieceTag::edge});
  decompose_good_range(g, w, at + 1, e, out);
}
}  // namespace detail

inline Decomposition decompose_good(const DefGraph& g, const Word& alpha, int q = 1) {
  require_reduced(g, alpha);
  Decomposition d;
  detail::decompose_good_range(g, alpha, 0, alpha.size(), d.pieces);
  d.bound = good_piece_bound(q, g.size());
  d.within_bound = BigInt(d.pieces.size()) <= d.bound;
  return d;
}

// ---------------------------------------------------------------------------
// Chain decompositions of arcs in T_v.

struct ChainSegment {
  int from = 0, to = 0;  ///< tree-vertex indices along the arc
  int length() const { return to - from; }
};

struct ChainReport {
  int arc_length = 0;
  std::vector<ChainSegment> mu;  ///< s + 1 segments
  std::vector<ChainSegment> nu;  ///< s segments, each bounded by a decent pair
  std::vector<int> gaps;         ///< v-hyperplanes strictly between consecutive ν
  BigInt n, l;
  bool mu_ok = true, nu_ok = true, s_ok = true, gaps_ok = true, ends_decent = true;
  bool all_ok() const { return mu_ok && nu_ok && s_ok && gaps_ok && ends_decent; }
};

namespace detail {

/// Collect decent v-hyperplane pairs (first, last as v-indices) covering
/// [a, b], longest first.
inline void chain_pairs(const DefGraph& g, const Word& alpha, const std::vector<std::size_t>& vpos, int a, int b,
                        int q, std::vector<std::pair<int, int>>& out) {
  if (b - a + 1 <= 2 * q) return;
  const auto s = Heap(g, alpha).interval(vpos[static_cast<std::size_t>(a)], vpos[static_cast<std::size_t>(b)]);
  if (is_decent(g, s.interval).decent) {
    out.emplace_back(a, b);
    return;
  }
  const Vertex v = alpha[vpos[static_cast<std::size_t>(a)]].vertex();
  for (const auto& piece : decompose_good(g, s.interval, q).pieces) {
    if (piece.tag == PieceTag::edge) continue;
    const Word sub(s.interval.begin() + static_cast<std::ptrdiff_t>(piece.begin),
                   s.interval.begin() + static_cast<std::ptrdiff_t>(piece.end));
    if (!is_decent(g, sub).decent) continue;
    // The t-th v letter of the interval is v-hyperplane a + t.
    int first = -1, last = -1, t = 0;
    for (std::size_t k = 0; k < s.interval.size(); ++k) {
      if (s.interval[k].vertex() != v) continue;
      if (k >= piece.begin && k < piece.end) {
        if (first < 0) first = a + t;
        last = a + t;
      }
      ++t;
    }
    if (first >= 0 && last > first && !(first == a && last == b)) chain_pairs(g, alpha, vpos, first, last, q, out);
  }
}

}  // namespace detail

inline ChainReport decompose_chain(const DefGraph& g, const TreeArc& arc, int q = 1) {
  const NormalForm alpha = arc_word(g, arc);
  const Heap heap(g, alpha.letters());
  const auto vpos = heap.pieces_of(arc.label);
  const int m = static_cast<int>(vpos.size());
  if (m == 0) throw Error(errc::degenerate_arc, "arc has length zero");

  ChainReport r;
  r.arc_length = m;
  r.n = n_q(q, g.size());
  r.l = chain_length_bound(q, g.size());

  std::vector<std::pair<int, int>> pairs;
  detail::chain_pairs(g, alpha.letters(), vpos, 0, m - 1, q, pairs);
  std::sort(pairs.begin(), pairs.end());

  // Edge k of the arc joins tree vertices k and k + 1.
  int cursor = 0;
  for (auto [a, b] : pairs) {
    r.mu.push_back({cursor, a});
    r.nu.push_back({a, b + 1});
    cursor = b + 1;
  }
  r.mu.push_back({cursor, m});

  const BigInt nv = pow_big(r.n, static_cast<unsigned>(g.size()));
  for (const auto& s : r.mu) r.mu_ok = r.mu_ok && BigInt(s.length()) <= r.l;
  for (const auto& s : r.nu) r.nu_ok = r.nu_ok && s.length() > 2 * q;
  r.s_ok = BigInt(r.nu.size()) <= nv && BigInt(r.nu.size()) <= r.l;
  for (std::size_t i = 1; i < r.nu.size(); ++i) {
    const int gap = r.nu[i].from - r.nu[i - 1].to;
    r.gaps.push_back(gap);
    r.gaps_ok = r.gaps_ok && BigInt(gap) <= 2 * r.n * g.size();
  }
  for (auto [a, b] : pairs) {
    const auto s = heap.interval(vpos[static_cast<std::size_t>(a)], vpos[static_cast<std::size_t>(b)]);
    r.ends_decent = r.ends_decent && is_decent(g, s.interval).decent;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Double centralisers of decent pairs.

enum class PairCase { centralizer_case, cyclic_case, unclassified };

inline const char* to_string(PairCase c) {
  switch (c) {
    case PairCase::centralizer_case: return "centralizer_case";
    case PairCase::cyclic_case: return "cyclic_case";
    case PairCase::unclassified: return "unclassified";
  }
  return "?";
}

struct PairClassification {
  PairCase kind = PairCase::unclassified;
  SubgroupForm stabilizer;       ///< G_u ∩ G_w = b·A_Σ·b^-1, Σ = Δ^⊥
  VertexSet sigma, closure;      ///< Σ and (Σ_⊥)_⊥
  std::optional<NormalForm> g;   ///< cyclic case: b·d·b^-1
  int crossed = 0;               ///< |W(u,w)|
  int skewered = 0;              ///< hyperplanes of W(u,w) skewered by g
  bool skewer_bound_ok = true;   ///< skewered >= |W(u,w)| - 2q
};

/// Is h crossed by the axis of g through base? Tested as separation of
/// g^-n·base from g^n·base for n past the word length.
inline bool skewers(const DefGraph& grp, const NormalForm& g, const NormalForm& base, const Hyperplane& h, int n) {
  const NormalForm gn = power(grp, g, n);
  return separates(grp, h, multiply(grp, invert(grp, gn), base), multiply(grp, gn, base));
}

/// ZZ(G_u ∩ G_w) = b·A_{(Σ_⊥)_⊥}·b^-1; either that is Σ again, or it adds a
/// single vertex d with Σ ∪ {d} = St d, making it Z(b·d·b^-1).
inline PairClassification classify_decent_pair(const DefGraph& g, const HyperplanePair& p, int q = 1) {
  const auto dec = is_decent(g, p.word);
  if (!dec.decent) throw Error(errc::not_decent, "pair word is not decent");
  PairClassification c;
  const VertexSet delta = delta_invariants(g, p).delta;
  c.sigma = perp(g, delta);
  c.closure = perp_closed(g, perp_closed(g, c.sigma));
  c.stabilizer = reduce_conjugator(g, parabolic(p.base, c.sigma));
  c.crossed = static_cast<int>(p.word.size());
  const VertexSet extra = c.closure - c.sigma;
  if (extra.empty()) {
    c.kind = PairCase::centralizer_case;
    return c;
  }
  if (extra.size() == 1 && (c.sigma | extra) == star(g, extra.least())) {
    c.kind = PairCase::cyclic_case;
    c.g = conjugate(g, p.base, generator(extra.least()));
    const int n = static_cast<int>(p.word.size()) + 1;
    for (const auto& h : path_hyperplanes(g, p.word, p.base))
      if (skewers(g, *c.g, p.base, h, n)) ++c.skewered;
    c.skewer_bound_ok = c.skewered >= c.crossed - 2 * q;
  }
  return c;
}

/// The subgroup ZZ(G_u ∩ G_w) as a semi-parabolic form.
inline SubgroupForm double_centralizer(const DefGraph& g, const HyperplanePair& p, const PairClassification& c) {
  return reduce_conjugator(g, parabolic(p.base, c.closure));
}

}  // namespace raagtk
