#pragma once

#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "raagtk/error.hpp"
#include "raagtk/word.hpp"

namespace raagtk {

inline constexpr std::size_t default_ball_cap = 5'000'000;

/// Enumeration cap, overridable through RAAGTK_BALL_CAP.
inline std::size_t ball_cap() {
  if (const char* env = std::getenv("RAAGTK_BALL_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return default_ball_cap;
}

/// Whether w·l is again a canonical normal form, given that w is one.
/// Canonical words are prefix closed, so this drives a DFS over the ball.
inline bool extends_canonically(const DefGraph& g, const Word& w, Letter l) {
  std::size_t j = w.size();
  while (j > 0 && !dependent(g, w[j - 1], l)) --j;
  if (j > 0 && w[j - 1] == l.inverse()) return false;
  for (std::size_t i = j; i < w.size(); ++i)
    if (!(w[i] < l)) return false;
  return true;
}

inline std::vector<Letter> all_letters(const DefGraph& g) {
  std::vector<Letter> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    out.push_back(Letter::make(v, false));
    out.push_back(Letter::make(v, true));
  }
  return out;
}

/// Calls f(w) for every canonical normal form of length <= radius, in
/// depth-first lexicographic order. Returning false from f prunes the subtree.
inline void for_each_normal_form(const DefGraph& g, int radius, const std::function<bool(const Word&)>& f) {
  const auto letters = all_letters(g);
  Word w;
  std::function<void()> rec = [&] {
    if (!f(w) || static_cast<int>(w.size()) >= radius) return;
    for (Letter l : letters) {
      if (!extends_canonically(g, w, l)) continue;
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

/// All elements of word length <= radius, ShortLex sorted.
inline std::vector<NormalForm> ball(const DefGraph& g, int radius, std::size_t cap = ball_cap()) {
  std::vector<NormalForm> out;
  for_each_normal_form(g, radius, [&](const Word& w) {
    if (out.size() >= cap)
      throw Error(errc::cap_exceeded, "ball of radius " + std::to_string(radius) + " exceeds cap " +
                                          std::to_string(cap) + " (raise RAAGTK_BALL_CAP or sample)");
    out.push_back(NormalForm::assume_canonical(w));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Uniform-step random canonical word of exactly the given length (shorter
/// only if the graph is empty).
template <class Rng>
NormalForm random_normal_form(const DefGraph& g, Rng& rng, int length) {
  const auto letters = all_letters(g);
  Word w;
  std::vector<Letter> options;
  for (int i = 0; i < length; ++i) {
    options.clear();
    for (Letter l : letters)
      if (extends_canonically(g, w, l)) options.push_back(l);
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    w.push_back(options[pick(rng)]);
  }
  return NormalForm::assume_canonical(std::move(w));
}

template <class Rng>
NormalForm random_element(const DefGraph& g, Rng& rng, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  return random_normal_form(g, rng, len(rng));
}

}  // namespace raagtk
