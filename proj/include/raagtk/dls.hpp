#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "raagtk/elements.hpp"
#include "raagtk/error.hpp"
#include "raagtk/word.hpp"

namespace raagtk {

enum class SplittingKind { hnn, amalgam };

/// Visual splitting: the HNN extension A_{Γ∖v} *_{A_{lk v}} with stable
/// letter v, or the amalgam A_{Δ_A} *_{A_{Δ_C}} A_{Δ_B}.
struct SplittingData {
  SplittingKind kind = SplittingKind::hnn;
  Vertex v = 0;
  VertexSet side_a, side_b, side_c;
};

enum class DlsKind { partial_conjugation, twist, fold, mixed_transvection };

inline const char* to_string(DlsKind k) {
  switch (k) {
    case DlsKind::partial_conjugation: return "partial_conjugation";
    case DlsKind::twist: return "twist";
    case DlsKind::fold: return "fold";
    case DlsKind::mixed_transvection: return "mixed_transvection";
  }
  return "?";
}

using ImageMap = std::vector<NormalForm>;  ///< indexed by vertex

struct DlsAutomorphism {
  SplittingData splitting;
  NormalForm z;
  DlsKind kind = DlsKind::twist;
  ImageMap images;
};

inline ImageMap identity_images(const DefGraph& g) {
  ImageMap m;
  for (Vertex u = 0; u < g.size(); ++u) m.push_back(generator(u));
  return m;
}

/// Transvection v ↦ z·v for z centralising A_{lk v} inside A_{Γ∖v}.
inline DlsAutomorphism build_transvection(const DefGraph& g, Vertex v, const NormalForm& z) {
  g.check(v);
  check_letters(g, z.letters());
  const VertexSet lk = link(g, v);
  const VertexSet sz = support(z);
  if (sz.contains(v)) throw Error(errc::not_in_centralizer, "z involves the stable letter " + g.name(v));
  for (Vertex c : lk.members())
    if (!commutes(g, z, generator(c)))
      throw Error(errc::not_in_centralizer, "z does not commute with link generator " + g.name(c));

  DlsAutomorphism phi;
  phi.splitting = {SplittingKind::hnn, v, {}, {}, {}};
  phi.z = z;
  if (sz.subset_of(lk & perp_closed(g, lk))) phi.kind = DlsKind::twist;
  else if (!support(cyclic_reduce(g, z).core).intersects(lk)) phi.kind = DlsKind::fold;
  else phi.kind = DlsKind::mixed_transvection;
  phi.images = identity_images(g);
  phi.images[static_cast<std::size_t>(v)] = multiply(g, z, generator(v));
  return phi;
}

/// Partial conjugation: fix A_{Δ_A}, conjugate Δ_B ∖ Δ_C by z.
inline DlsAutomorphism build_partial_conjugation(const DefGraph& g, VertexSet a, VertexSet b, VertexSet c,
                                                 const NormalForm& z) {
  g.check(a | b | c);
  check_letters(g, z.letters());
  if ((a | b) != g.all()) throw Error(errc::not_visual_splitting, "sides do not cover the graph");
  if ((a & b) != c) throw Error(errc::not_visual_splitting, "sides do not meet in the edge group");
  if (c == a || c == b) throw Error(errc::not_visual_splitting, "degenerate side");
  for (Vertex x : (a - c).members())
    if (link(g, x).intersects(b - c))
      throw Error(errc::not_visual_splitting, "edge between the two sides outside the edge group");
  if (!support(z).subset_of(a)) throw Error(errc::not_in_centralizer, "z is not supported in side A");
  for (Vertex x : c.members())
    if (!commutes(g, z, generator(x)))
      throw Error(errc::not_in_centralizer, "z does not commute with edge generator " + g.name(x));

  DlsAutomorphism phi;
  phi.splitting = {SplittingKind::amalgam, 0, a, b, c};
  phi.z = z;
  phi.kind = DlsKind::partial_conjugation;
  phi.images = identity_images(g);
  for (Vertex x : (b - c).members()) phi.images[static_cast<std::size_t>(x)] = conjugate(g, z, generator(x));
  return phi;
}

inline NormalForm apply_images(const DefGraph& g, const ImageMap& images, const NormalForm& a) {
  Word w;
  for (Letter l : a.letters()) {
    const NormalForm& im = images.at(static_cast<std::size_t>(l.vertex()));
    if (l.positive()) {
      w.insert(w.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) w.push_back(it->inverse());
    }
  }
  return normalize(g, w);
}

inline NormalForm apply(const DefGraph& g, const DlsAutomorphism& phi, const NormalForm& a) {
  if (phi.images.size() != static_cast<std::size_t>(g.size()))
    throw Error(errc::precondition, "automorphism built over a different graph");
  return apply_images(g, phi.images, a);
}

/// Images of φ∘ψ.
inline ImageMap compose(const DefGraph& g, const ImageMap& phi, const ImageMap& psi) {
  ImageMap out;
  for (const auto& im : psi) out.push_back(apply_images(g, phi, im));
  return out;
}

inline DlsAutomorphism rebuild(const DefGraph& g, const SplittingData& s, const NormalForm& z) {
  if (s.kind == SplittingKind::hnn) return build_transvection(g, s.v, z);
  return build_partial_conjugation(g, s.side_a, s.side_b, s.side_c, z);
}

inline DlsAutomorphism inverse(const DefGraph& g, const DlsAutomorphism& phi) {
  return rebuild(g, phi.splitting, invert(g, phi.z));
}

struct AutomorphismCheck {
  bool ok = true;
  std::string diagnostic;
};

/// Edge relators map to the identity, and the inverse built from the
/// splitting data undoes the recorded images on both sides.
inline AutomorphismCheck verify_automorphism(const DefGraph& g, const DlsAutomorphism& phi) {
  if (phi.images.size() != static_cast<std::size_t>(g.size())) return {false, "image map has wrong size"};
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex w = u + 1; w < g.size(); ++w)
      if (g.adjacent(u, w) && !commutes(g, phi.images[static_cast<std::size_t>(u)], phi.images[static_cast<std::size_t>(w)]))
        return {false, "relator [" + g.name(u) + "," + g.name(w) + "] not preserved"};
  DlsAutomorphism inv;
  try {
    inv = inverse(g, phi);
  } catch (const Error& e) {
    return {false, std::string("no inverse: ") + e.what()};
  }
  const ImageMap id = identity_images(g);
  if (compose(g, phi.images, inv.images) != id) return {false, "phi after inverse is not the identity"};
  if (compose(g, inv.images, phi.images) != id) return {false, "inverse after phi is not the identity"};
  return {};
}

struct OuterCertificate {
  std::vector<std::vector<int>> traces;  ///< per probe, core length of φ^n(probe), n = 0..max
  std::optional<std::size_t> witness;    ///< probe with a strictly increasing trace
  std::vector<int> outer_powers;         ///< n with φ^n provably not inner
  int max_power = 0;
  bool certified() const { return witness.has_value(); }
};

/// Conjugacy length is an inner invariant: any change in the cyclic-core
/// length of φ^n(g) shows φ^n is outer, and a strictly increasing trace
/// certifies infinite order in Out up to max_power.
inline OuterCertificate outer_order_certificate(const DefGraph& g, const DlsAutomorphism& phi,
                                                const std::vector<NormalForm>& probes, int max_power) {
  if (probes.empty()) throw Error(errc::precondition, "no probes given");
  OuterCertificate cert;
  cert.max_power = max_power;
  std::vector<char> outer(static_cast<std::size_t>(max_power + 1), 0);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    std::vector<int> tr;
    NormalForm cur = probes[i];
    for (int n = 0; n <= max_power; ++n) {
      if (n > 0) cur = apply(g, phi, cur);
      tr.push_back(static_cast<int>(cyclic_reduce(g, cur).core.size()));
      if (tr.back() != tr.front()) outer[static_cast<std::size_t>(n)] = 1;
    }
    bool increasing = max_power > 0;
    for (std::size_t n = 1; n < tr.size(); ++n) increasing = increasing && tr[n] > tr[n - 1];
    if (increasing && !cert.witness) cert.witness = i;
    cert.traces.push_back(std::move(tr));
  }
  for (int n = 1; n <= max_power; ++n)
    if (outer[static_cast<std::size_t>(n)]) cert.outer_powers.push_back(n);
  return cert;
}

// Spec syntax: `twist|fold|mixed|transvection v=b z=a` or `pc A=a,b B=b,c C=b z=a`,
// letters of z separated by '.'.

inline DlsAutomorphism parse_dls(const DefGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  if (!(in >> kind)) throw Error(errc::parse_error, "empty automorphism spec");
  std::optional<Vertex> v;
  std::optional<VertexSet> a, b, c;
  NormalForm z;
  for (std::string field; in >> field;) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(errc::parse_error, "automorphism field without '=': " + field);
    const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "v") v = g.vertex(val);
    else if (key == "z") z = parse_element(g, val);
    else if (key == "A") a = g.parse_set(val);
    else if (key == "B") b = g.parse_set(val);
    else if (key == "C") c = g.parse_set(val);
    else throw Error(errc::parse_error, "unknown automorphism field " + key);
  }
  if (kind == "pc" || kind == "partial_conjugation") {
    if (!a || !b || !c) throw Error(errc::parse_error, "partial conjugation needs A=, B= and C=");
    return build_partial_conjugation(g, *a, *b, *c, z);
  }
  if (!v) throw Error(errc::parse_error, "transvection needs v=");
  DlsAutomorphism phi = build_transvection(g, *v, z);
  const bool matches = kind == "transvection" || (kind == "twist" && phi.kind == DlsKind::twist) ||
                       (kind == "fold" && phi.kind == DlsKind::fold) ||
                       ((kind == "mixed" || kind == "mixed_transvection") && phi.kind == DlsKind::mixed_transvection);
  if (kind != "transvection" && kind != "twist" && kind != "fold" && kind != "mixed" && kind != "mixed_transvection")
    throw Error(errc::parse_error, "unknown automorphism kind " + kind);
  if (!matches)
    throw Error(errc::precondition, "declared " + kind + " but z gives " + to_string(phi.kind));
  return phi;
}

inline std::string format(const DefGraph& g, const DlsAutomorphism& phi) {
  const std::string z = "z=" + format(g, phi.z, ".");
  if (phi.splitting.kind == SplittingKind::amalgam) {
    auto strip = [&g](VertexSet s) {
      std::string t = g.format_set(s);
      return t.substr(1, t.size() - 2);
    };
    return "pc A=" + strip(phi.splitting.side_a) + " B=" + strip(phi.splitting.side_b) + " C=" +
           strip(phi.splitting.side_c) + " " + z;
  }
  const char* k = phi.kind == DlsKind::twist ? "twist" : phi.kind == DlsKind::fold ? "fold" : "mixed";
  return std::string(k) + " v=" + g.name(phi.splitting.v) + " " + z;
}

}  // namespace raagtk
