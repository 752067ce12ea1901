#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagtk/error.hpp"
#include "raagtk/graph.hpp"

namespace raagtk {

/// A generator or its inverse. Encoded so that the natural order is graph
/// order of the vertex, with v^-1 before v.
struct Letter {
  std::uint8_t code = 0;

  static constexpr Letter make(Vertex v, bool positive) {
    return Letter{static_cast<std::uint8_t>((v << 1) | (positive ? 1 : 0))};
  }
  constexpr Vertex vertex() const { return code >> 1; }
  constexpr bool positive() const { return code & 1U; }
  constexpr int sign() const { return positive() ? 1 : -1; }
  constexpr Letter inverse() const { return Letter{static_cast<std::uint8_t>(code ^ 1U)}; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

/// Letters x, y cannot be shuffled past each other (same vertex or no edge).
inline bool dependent(const DefGraph& g, Letter x, Letter y) {
  return x.vertex() == y.vertex() || !g.adjacent(x.vertex(), y.vertex());
}

inline void check_letters(const DefGraph& g, const Word& w) {
  for (Letter l : w)
    if (l.vertex() >= g.size()) throw Error(errc::invalid_letter, "letter outside the defining graph");
}

/// Canonical reduced representative of a group element: reduced, and the
/// lexicographically least linearisation of its trace (greedy least first letter).
class NormalForm {
public:
  NormalForm() = default;

  /// Wrap letters already known to be canonical. No check is made.
  static NormalForm assume_canonical(Word w) {
    NormalForm nf;
    nf.letters_ = std::move(w);
    return nf;
  }

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  /// ShortLex.
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

private:
  Word letters_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : nf.letters()) {
      h ^= l.code + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

namespace detail {

/// Append x to a reduced word, cancelling against the nearest same-vertex
/// letter reachable through commuting letters.
inline void push_reduced(const DefGraph& g, Word& out, Letter x) {
  for (std::size_t j = out.size(); j-- > 0;) {
    Letter y = out[j];
    if (y.vertex() == x.vertex()) {
      if (y == x.inverse()) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        return;
      }
      break;
    }
    if (!g.adjacent(y.vertex(), x.vertex())) break;
  }
  out.push_back(x);
}

/// Lexicographically least linearisation of the trace of a reduced word.
inline Word canonical_order(const DefGraph& g, const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) return w;
  thread_local std::vector<int> indeg;
  indeg.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dependent(g, w[i], w[j])) ++indeg[j];
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] == 0 && (best == n || w[i] < w[best])) best = i;
    indeg[best] = -1;
    out.push_back(w[best]);
    for (std::size_t j = best + 1; j < n; ++j)
      if (indeg[j] > 0 && dependent(g, w[best], w[j])) --indeg[j];
  }
  return out;
}

}  // namespace detail

inline NormalForm normalize(const DefGraph& g, const Word& w) {
  check_letters(g, w);
  Word out;
  out.reserve(w.size());
  for (Letter x : w) detail::push_reduced(g, out, x);
  return NormalForm::assume_canonical(detail::canonical_order(g, out));
}

inline NormalForm multiply(const DefGraph& g, const NormalForm& a, const NormalForm& b) {
  check_letters(g, a.letters());
  check_letters(g, b.letters());
  if (b.empty()) return a;
  if (a.empty()) return b;
  Word out = a.letters();
  out.reserve(a.size() + b.size());
  for (Letter x : b.letters()) detail::push_reduced(g, out, x);
  return NormalForm::assume_canonical(detail::canonical_order(g, out));
}

inline NormalForm multiply(const DefGraph& g, std::initializer_list<std::reference_wrapper<const NormalForm>> fs) {
  NormalForm acc;
  for (const NormalForm& f : fs) acc = multiply(g, acc, f);
  return acc;
}

inline NormalForm invert(const DefGraph& g, const NormalForm& a) {
  check_letters(g, a.letters());
  Word out(a.letters().rbegin(), a.letters().rend());
  for (Letter& l : out) l = l.inverse();
  return NormalForm::assume_canonical(detail::canonical_order(g, out));
}

inline NormalForm power(const DefGraph& g, const NormalForm& a, long n) {
  NormalForm base = n < 0 ? invert(g, a) : a;
  NormalForm acc;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) acc = multiply(g, acc, base);
  return acc;
}

/// x·a·x^-1
inline NormalForm conjugate(const DefGraph& g, const NormalForm& x, const NormalForm& a) {
  return multiply(g, multiply(g, x, a), invert(g, x));
}

inline NormalForm generator(Vertex v, bool positive = true) {
  return NormalForm::assume_canonical(Word{Letter::make(v, positive)});
}

/// Letters with no dependent letter before them (the first letters of the trace).
inline std::vector<Letter> first_letters(const DefGraph& g, const NormalForm& a) {
  std::vector<Letter> out;
  const Word& w = a.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool free = true;
    for (std::size_t j = 0; j < i && free; ++j) free = !dependent(g, w[j], w[i]);
    if (free) out.push_back(w[i]);
  }
  return out;
}

inline std::vector<Letter> last_letters(const DefGraph& g, const NormalForm& a) {
  std::vector<Letter> out;
  const Word& w = a.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool free = true;
    for (std::size_t j = i + 1; j < w.size() && free; ++j) free = !dependent(g, w[i], w[j]);
    if (free) out.push_back(w[i]);
  }
  return out;
}

inline VertexSet support(const NormalForm& a) {
  VertexSet s;
  for (Letter l : a.letters()) s.insert(l.vertex());
  return s;
}

inline int vertex_count(const NormalForm& a, Vertex v) {
  return static_cast<int>(std::count_if(a.letters().begin(), a.letters().end(),
                                        [v](Letter l) { return l.vertex() == v; }));
}

/// Word distance d(a, b) = |a^-1 b|.
inline int distance(const DefGraph& g, const NormalForm& a, const NormalForm& b) {
  return static_cast<int>(multiply(g, invert(g, a), b).size());
}

namespace detail {

/// Letters of the largest common prefix, in removal order.
inline Word common_prefix_letters(const DefGraph& g, const Word& u, const Word& w) {
  // Pending dependent predecessors per piece; a piece is a first letter of
  // what remains once its count drops to zero.
  thread_local std::vector<int> du, dw;
  auto indegrees = [&g](const Word& word, std::vector<int>& d) {
    d.assign(word.size(), 0);
    for (std::size_t i = 0; i < word.size(); ++i)
      for (std::size_t j = i + 1; j < word.size(); ++j)
        if (dependent(g, word[i], word[j])) ++d[j];
  };
  indegrees(u, du);
  indegrees(w, dw);
  auto remove = [&g](const Word& word, std::vector<int>& d, std::size_t i) {
    d[i] = -1;
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (d[j] > 0 && dependent(g, word[i], word[j])) --d[j];
  };
  Word prefix;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < u.size() && !moved; ++i) {
      if (du[i] != 0) continue;
      // Same-letter pieces are totally ordered, so only the first pending
      // occurrence in w can be available.
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != u[i] || dw[k] < 0) continue;
        if (dw[k] == 0) {
          remove(u, du, i);
          remove(w, dw, k);
          prefix.push_back(u[i]);
          moved = true;
        }
        break;
      }
    }
  }
  return prefix;
}

}  // namespace detail

/// Largest common prefix (in the trace sense) of two normal forms, found by
/// repeatedly removing a letter that is simultaneously a first letter of both.
inline NormalForm common_prefix(const DefGraph& g, const NormalForm& a, const NormalForm& b) {
  return NormalForm::assume_canonical(
      detail::canonical_order(g, detail::common_prefix_letters(g, a.letters(), b.letters())));
}

inline std::size_t common_prefix_length(const DefGraph& g, const NormalForm& a, const NormalForm& b) {
  return detail::common_prefix_letters(g, a.letters(), b.letters()).size();
}

/// g = x·core·x^-1 with the concatenation reduced and core cyclically reduced.
struct CyclicDecomposition {
  NormalForm conjugator;
  NormalForm core;
};

inline CyclicDecomposition cyclic_reduce(const DefGraph& g, const NormalForm& a) {
  NormalForm core = a;
  Word conj;
  for (;;) {
    auto firsts = first_letters(g, core);
    auto lasts = last_letters(g, core);
    std::sort(firsts.begin(), firsts.end());
    bool peeled = false;
    for (Letter f : firsts) {
      if (std::find(lasts.begin(), lasts.end(), f.inverse()) == lasts.end()) continue;
      NormalForm x = generator(f.vertex(), f.positive());
      core = multiply(g, multiply(g, invert(g, x), core), x);
      conj.push_back(f);
      peeled = true;
      break;
    }
    if (!peeled) break;
  }
  return {normalize(g, conj), core};
}

inline bool is_cyclically_reduced(const DefGraph& g, const NormalForm& a) {
  auto firsts = first_letters(g, a);
  auto lasts = last_letters(g, a);
  for (Letter f : firsts)
    if (std::find(lasts.begin(), lasts.end(), f.inverse()) != lasts.end()) return false;
  return true;
}

// Text syntax: whitespace- (or '.'/'*'-) separated letters `a`, `a^-1`, `a^3`;
// the identity is written `1`.

inline Word parse_word(const DefGraph& g, std::string_view text) {
  Word w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty() || tok == "1") {
      tok.clear();
      return;
    }
    std::string name = tok;
    long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        exponent = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e.size() || e.empty())
        throw Error(errc::invalid_letter, "bad exponent in letter '" + tok + "'");
    }
    if (name.empty()) throw Error(errc::invalid_letter, "empty letter in '" + tok + "'");
    const Vertex v = g.vertex(name);
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      w.push_back(Letter::make(v, exponent > 0));
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '.' || c == '*') flush();
    else tok += c;
  }
  flush();
  return w;
}

inline NormalForm parse_element(const DefGraph& g, std::string_view text) {
  return normalize(g, parse_word(g, text));
}

inline std::string format_word(const DefGraph& g, const Word& w, std::string_view sep = " ") {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += g.name(w[i].vertex());
    if (!w[i].positive()) out += "^-1";
  }
  return out;
}

inline std::string format(const DefGraph& g, const NormalForm& a, std::string_view sep = " ") {
  return format_word(g, a.letters(), sep);
}

}  // namespace raagtk
