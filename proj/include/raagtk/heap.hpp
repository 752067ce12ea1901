#pragma once

#include <cstddef>
#include <vector>

#include "raagtk/error.hpp"
#include "raagtk/word.hpp"

namespace raagtk {

/// Partial order on the letters (pieces) of a reduced word: i <= j when a
/// chain of dependent letters leads from position i to position j.
class Heap {
public:
  Heap(const DefGraph& g, Word w) : w_(std::move(w)), le_(w_.size(), std::vector<char>(w_.size(), 0)) {
    const std::size_t n = w_.size();
    for (std::size_t j = 0; j < n; ++j) {
      le_[j][j] = 1;
      for (std::size_t i = 0; i < j; ++i) {
        if (!dependent(g, w_[i], w_[j])) continue;
        for (std::size_t k = 0; k <= i; ++k)
          if (le_[k][i]) le_[k][j] = 1;
      }
    }
  }

  const Word& word() const { return w_; }
  std::size_t size() const { return w_.size(); }
  bool le(std::size_t i, std::size_t j) const { return le_[i][j]; }

  /// Pieces carrying a given vertex, in (total) heap order.
  std::vector<std::size_t> pieces_of(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i].vertex() == v) out.push_back(i);
    return out;
  }

  /// Linearisation before · [i, j] · after, where before = {k : not i <= k}
  /// and [i, j] = {k : i <= k <= j}. Each part keeps word order, so the
  /// concatenation is again a reduced word for the same element.
  struct IntervalSplit {
    Word before;
    Word interval;
    Word after;
  };

  IntervalSplit interval(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size() || !le(i, j))
      throw Error(errc::invalid_pair, "pieces are not comparable in the heap");
    IntervalSplit s;
    for (std::size_t k = 0; k < size(); ++k) {
      if (!le(i, k)) s.before.push_back(w_[k]);
      else if (le(k, j)) s.interval.push_back(w_[k]);
      else s.after.push_back(w_[k]);
    }
    return s;
  }

  /// True when the word has a unique minimal and a unique maximal piece.
  bool has_unique_ends() const {
    const std::size_t n = size();
    if (n == 0) return false;
    for (std::size_t k = 0; k < n; ++k)
      if (!le(0, k) || !le(k, n - 1)) return false;
    return true;
  }

private:
  Word w_;
  std::vector<std::vector<char>> le_;
};

}  // namespace raagtk
