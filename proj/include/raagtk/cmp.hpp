#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raagtk/ball.hpp"
#include "raagtk/dls.hpp"
#include "raagtk/heap.hpp"
#include "raagtk/median.hpp"

namespace raagtk {

struct Triple {
  NormalForm x, y, p;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.p < b.p;
  }
};

struct DefectReport {
  int radius = 0;
  int defect = 0;
  std::optional<Triple> witness;  ///< absent only when nothing was scanned
};

/// d(Φp, m(Φp, Φx, Φy)) for one triple.
inline int triple_defect(const DefGraph& g, const ImageMap& phi, const Triple& t) {
  const NormalForm fp = apply_images(g, phi, t.p);
  return distance(g, fp, median(g, fp, apply_images(g, phi, t.x), apply_images(g, phi, t.y)));
}

namespace detail {

/// A triple with p = m(x,y,p) is, up to translation, a reduced product
/// x^-1 y = π·σ with p = x·π. Its defect is |cp(Φ(π)^-1, Φ(σ))| and it fits
/// in B(R) iff ⌈(|π|+|σ|)/2⌉ <= R: centre the ball at the midpoint of the
/// path x → p → y. This rebuilds that centred triple.
inline NormalForm centred_start(const DefGraph& g, const Word& pi, const Word& sigma) {
  const std::size_t k = (pi.size() + sigma.size()) / 2;
  Word mid(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(std::min(k, pi.size())));
  if (k > pi.size()) mid.insert(mid.end(), sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(k - pi.size()));
  return invert(g, normalize(g, mid));
}

inline Triple centred_triple(const DefGraph& g, const Word& pi, const Word& sigma, NormalForm x) {
  NormalForm p = multiply(g, x, NormalForm::assume_canonical(pi));
  NormalForm y = multiply(g, p, NormalForm::assume_canonical(sigma));
  return {std::move(x), std::move(y), std::move(p)};
}

inline Triple centred_triple(const DefGraph& g, const Word& pi, const Word& sigma) {
  return centred_triple(g, pi, sigma, centred_start(g, pi, sigma));
}

inline int needed_radius(std::size_t len) { return static_cast<int>((len + 1) / 2); }

/// Would appending l to σ cancel against π in the product π·σ·l?
inline bool cancels_into(const DefGraph& g, const Word& pi, const Word& sigma, Letter l) {
  for (std::size_t j = sigma.size(); j-- > 0;)
    if (dependent(g, sigma[j], l)) return false;
  for (std::size_t j = pi.size(); j-- > 0;)
    if (dependent(g, pi[j], l)) return pi[j] == l.inverse();
  return false;
}

inline std::size_t count_ball(const DefGraph& g, int radius, std::size_t cap) {
  std::size_t n = 0;
  for_each_normal_form(g, radius, [&](const Word&) {
    if (++n > cap)
      throw Error(errc::cap_exceeded, "ball of radius " + std::to_string(radius) + " exceeds cap " +
                                          std::to_string(cap) + "; use sampling");
    return true;
  });
  return n;
}

}  // namespace detail

/// Exhaustive defect for every radius 1..max_radius in one pass (the result
/// is the running maximum, hence monotone). Ties pick the least (x,y,p).
inline std::vector<DefectReport> cmp_defect_profile(const DefGraph& g, const DlsAutomorphism& phi, int max_radius,
                                                    std::size_t cap = ball_cap()) {
  if (max_radius < 1) throw Error(errc::out_of_range, "radius must be at least 1");
  detail::count_ball(g, 2 * max_radius, cap);
  const int max_len = 2 * max_radius;
  const auto letters = all_letters(g);
  const ImageMap& im = phi.images;
  std::vector<NormalForm> letter_image(2 * static_cast<std::size_t>(g.size()));
  for (Letter l : letters) {
    const NormalForm& f = im[static_cast<std::size_t>(l.vertex())];
    letter_image[l.code] = l.positive() ? f : invert(g, f);
  }
  std::vector<DefectReport> at(static_cast<std::size_t>(max_radius + 1));
  for (int r = 0; r <= max_radius; ++r) at[static_cast<std::size_t>(r)].radius = r;

  auto record = [&](const Word& pi, const Word& sigma, int d) {
    auto& slot = at[static_cast<std::size_t>(detail::needed_radius(pi.size() + sigma.size()))];
    if (slot.witness && d < slot.defect) return;
    NormalForm x = detail::centred_start(g, pi, sigma);
    if (slot.witness && d == slot.defect && slot.witness->x < x) return;
    Triple t = detail::centred_triple(g, pi, sigma, std::move(x));
    if (!slot.witness || d > slot.defect || t < *slot.witness) {
      slot.defect = d;
      slot.witness = std::move(t);
    }
  };

  Word sigma;
  std::vector<NormalForm> phi_sigma;
  for_each_normal_form(g, max_len, [&](const Word& pi) {
    const NormalForm a = invert(g, apply_images(g, im, NormalForm::assume_canonical(pi)));
    sigma.clear();
    phi_sigma.assign(1, NormalForm{});
    std::function<void()> rec = [&] {
      record(pi, sigma, static_cast<int>(common_prefix_length(g, a, phi_sigma.back())));
      if (pi.size() + sigma.size() >= static_cast<std::size_t>(max_len)) return;
      for (Letter l : letters) {
        if (!extends_canonically(g, sigma, l) || detail::cancels_into(g, pi, sigma, l)) continue;
        sigma.push_back(l);
        phi_sigma.push_back(multiply(g, phi_sigma.back(), letter_image[l.code]));
        rec();
        sigma.pop_back();
        phi_sigma.pop_back();
      }
    };
    rec();
    return true;
  });

  std::vector<DefectReport> out;
  DefectReport best{0, 0, std::nullopt};
  for (int r = 0; r <= max_radius; ++r) {
    const auto& s = at[static_cast<std::size_t>(r)];
    if (s.witness && (!best.witness || s.defect > best.defect || (s.defect == best.defect && *s.witness < *best.witness))) {
      best.defect = s.defect;
      best.witness = s.witness;
    }
    best.radius = r;
    if (r >= 1) out.push_back(best);
  }
  return out;
}

inline DefectReport cmp_defect(const DefGraph& g, const DlsAutomorphism& phi, int radius,
                               std::size_t cap = ball_cap()) {
  return cmp_defect_profile(g, phi, radius, cap).back();
}

/// Literal scan over all x, y, p in B(radius) with p = m(x,y,p); used to
/// cross-check the split reduction at small radii.
inline DefectReport cmp_defect_by_triples(const DefGraph& g, const ImageMap& phi, int radius) {
  const auto b = ball(g, radius);
  DefectReport rep{radius, 0, std::nullopt};
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& p : b) {
        if (median(g, x, y, p) != p) continue;
        Triple t{x, y, p};
        const int d = triple_defect(g, phi, t);
        if (!rep.witness || d > rep.defect || (d == rep.defect && t < *rep.witness)) {
          rep.defect = d;
          rep.witness = t;
        }
      }
  return rep;
}

/// Lower bound from n random splits inside B(2·radius).
template <class Rng>
DefectReport cmp_defect_sampled(const DefGraph& g, const DlsAutomorphism& phi, int radius, int n, Rng& rng) {
  DefectReport rep{radius, 0, std::nullopt};
  for (int i = 0; i < n; ++i) {
    const NormalForm w = random_element(g, rng, 2 * radius);
    // Random linear extension of the heap; its first k letters form a prefix.
    const Heap heap(g, w.letters());
    std::vector<char> taken(w.size(), 0);
    Word order;
    while (order.size() < w.size()) {
      std::vector<std::size_t> avail;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (taken[k]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) ok = taken[j] || !heap.le(j, k);
        if (ok) avail.push_back(k);
      }
      const std::size_t k = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(rng)];
      taken[k] = 1;
      order.push_back(w[k]);
    }
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, order.size())(rng);
    const NormalForm pi = normalize(g, Word(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut)));
    const NormalForm sigma = normalize(g, Word(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end()));
    Triple t = detail::centred_triple(g, pi.letters(), sigma.letters());
    const int d = triple_defect(g, phi.images, t);
    if (!rep.witness || d > rep.defect || (d == rep.defect && t < *rep.witness)) {
      rep.defect = d;
      rep.witness = t;
    }
  }
  return rep;
}

enum class CmpVerdict { cmp_by_theorem, not_cmp_suspected, undecided };

inline const char* to_string(CmpVerdict v) {
  switch (v) {
    case CmpVerdict::cmp_by_theorem: return "CMP_by_Thm";
    case CmpVerdict::not_cmp_suspected: return "NOT_CMP_suspected";
    case CmpVerdict::undecided: return "UNDECIDED";
  }
  return "?";
}

struct CmpCertificate {
  CmpVerdict verdict = CmpVerdict::undecided;
  std::vector<std::string> trace;
  std::vector<DefectReport> defects;  ///< radii scanned when probing
};

/// Rule set: folds and partial conjugations are CMP; transvections along a
/// splitting whose edge group has trivial centre are CMP; a twist by a
/// label-irreducible z whose centraliser lies in A_{Γ∖v} is CMP; otherwise
/// probe the defect at radii 2..5 and report growth as suspicion only.
inline CmpCertificate cmp_certify(const DefGraph& g, const DlsAutomorphism& phi, std::size_t cap = ball_cap()) {
  CmpCertificate c;
  if (phi.z.empty()) {
    c.trace.push_back("z is trivial: identity automorphism");
    c.verdict = CmpVerdict::cmp_by_theorem;
    return c;
  }
  if (phi.kind == DlsKind::fold || phi.kind == DlsKind::partial_conjugation) {
    c.trace.push_back(std::string("rule 1: ") + to_string(phi.kind) + " of a visual splitting");
    c.verdict = CmpVerdict::cmp_by_theorem;
    return c;
  }
  const Vertex v = phi.splitting.v;
  const VertexSet lk = link(g, v);
  if ((lk & perp_closed(g, lk)).empty()) {
    c.trace.push_back("rule 3: edge group A_lk(" + g.name(v) + ") has trivial centre");
    c.verdict = CmpVerdict::cmp_by_theorem;
    return c;
  }
  if (phi.kind == DlsKind::twist) {
    const bool li = is_label_irreducible(g, phi.z);
    const bool inside = !perp(g, gamma(g, phi.z)).contains(v);
    c.trace.push_back(std::string("rule 2: z ") + (li ? "is" : "is not") + " label-irreducible, Z(z) " +
                      (inside ? "lies" : "does not lie") + " in A_{Γ∖" + g.name(v) + "}");
    if (li && inside) {
      c.verdict = CmpVerdict::cmp_by_theorem;
      return c;
    }
  } else {
    c.trace.push_back("mixed transvection: no rule applies");
  }
  try {
    const auto prof = cmp_defect_profile(g, phi, 5, cap);
    c.defects.assign(prof.begin() + 1, prof.end());
  } catch (const Error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    c.trace.push_back("defect probe skipped: " + std::string(e.what()));
    return c;
  }
  std::string seq;
  for (const auto& d : c.defects) seq += (seq.empty() ? "" : ",") + std::to_string(d.defect);
  if (c.defects.back().defect > c.defects.front().defect) {
    c.trace.push_back("defect grows over radii 2..5: " + seq);
    c.verdict = CmpVerdict::not_cmp_suspected;
  } else {
    c.trace.push_back("defect flat over radii 2..5: " + seq);
  }
  return c;
}

}  // namespace raagtk
