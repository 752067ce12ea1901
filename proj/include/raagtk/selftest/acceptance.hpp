#pragma once

// The acceptance suite: eleven oracle-backed criteria with fixed seeds.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "raagtk/raagtk.hpp"
#include "raagtk/selftest/graphs.hpp"
#include "raagtk/selftest/oracles.hpp"

namespace raagtk::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

using Rng = std::mt19937_64;

namespace detail {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::string show(const DefGraph& g) {
  std::string s = g.dump();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

inline NormalForm random_word_on(const DefGraph& g, Rng& rng, VertexSet allowed, int len) {
  const auto vs = allowed.members();
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(Letter::make(pick(rng, vs), uniform(rng, 0, 1) == 1));
  return normalize(g, w);
}

// 1 ------------------------------------------------------------------------

inline Outcome normal_forms() {
  Outcome o;
  std::uint64_t words = 0;
  const auto graphs = small_graphs(4);
  for (const auto& g : graphs) {
    ShuffleOracle oracle(g, 6);
    for (std::uint64_t id = 0; id < oracle.word_count(); ++id) {
      const Word w = oracle.decode(id);
      ++words;
      if (normalize(g, w).letters() != oracle.least_equivalent(w)) {
        o.fail("mismatch on " + format_word(g, w) + " over " + show(g));
        return o;
      }
    }
  }
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(words) + " words";
  return o;
}

// 2 ------------------------------------------------------------------------

inline Outcome medians() {
  Outcome o;
  std::uint64_t triples = 0;
  for (const auto& g : small_graphs(4)) {
    MajorityMedianOracle oracle(g, 4);
    const auto b = ball(g, 3);
    std::vector<std::vector<int>> walls;
    for (const auto& p : b) walls.push_back(oracle.walls(p));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j)
        for (std::size_t k = j; k < b.size(); ++k) {
          ++triples;
          const auto want = oracle.lookup(MajorityMedianOracle::majority(walls[i], walls[j], walls[k]));
          const NormalForm got = median(g, b[i], b[j], b[k]);
          if (!want || *want != got) {
            o.fail("median of " + format(g, b[i]) + ", " + format(g, b[j]) + ", " + format(g, b[k]) + " over " +
                   show(g));
            return o;
          }
        }
  }
  o.detail = std::to_string(triples) + " unordered triples";
  return o;
}

// 3 ------------------------------------------------------------------------

inline Outcome centralizers(Rng& rng) {
  Outcome o;
  const auto graphs = small_graphs(4);
  std::uint64_t checks = 0;
  for (int t = 0; t < 50; ++t) {
    const DefGraph& g = pick(rng, graphs);
    NormalForm a;
    while (a.empty()) a = random_element(g, rng, 6);
    const auto cf = centralizer(g, a);
    for (const auto& h : ball(g, 4)) {
      ++checks;
      if (membership_centralizer(g, cf, h) != commutes(g, a, h)) {
        o.fail("g=" + format(g, a) + " h=" + format(g, h) + " over " + show(g));
        return o;
      }
    }
  }
  o.detail = "50 elements, " + std::to_string(checks) + " membership checks";
  return o;
}

// 4 ------------------------------------------------------------------------

inline Outcome good_decompositions(Rng& rng) {
  Outcome o;
  const auto graphs = small_graphs(4);
  std::size_t most = 0;
  for (int t = 0; t < 500; ++t) {
    const DefGraph& g = pick(rng, graphs);
    const NormalForm a = random_normal_form(g, rng, uniform(rng, 1, 12));
    const Word& w = a.letters();
    const auto d = decompose_good(g, w);
    most = std::max(most, d.pieces.size());
    const std::string where = format(g, a) + " over " + show(g);
    if (BigInt(d.pieces.size()) > pow_big(7, static_cast<unsigned>(g.size())) || !d.within_bound)
      o.fail("too many pieces for " + where);
    std::size_t at = 0;
    for (const auto& p : d.pieces) {
      if (p.begin != at || p.end <= p.begin) o.fail("pieces do not tile " + where);
      at = p.end;
      if (p.tag == PieceTag::edge) {
        if (p.end - p.begin != 1) o.fail("edge piece longer than one letter in " + where);
        continue;
      }
      const Word sub(w.begin() + static_cast<std::ptrdiff_t>(p.begin), w.begin() + static_cast<std::ptrdiff_t>(p.end));
      if (!is_decent(g, sub).decent) o.fail("non-decent piece in " + where);
    }
    if (at != w.size()) o.fail("pieces do not cover " + where);
    if (!o.pass) return o;
  }
  o.detail = "500 geodesics, at most " + std::to_string(most) + " pieces";
  return o;
}

// 5 ------------------------------------------------------------------------

inline Outcome chain_decompositions(Rng& rng) {
  Outcome o;
  const DefGraph g = path3();
  int done = 0, longest = 0, decent = 0;
  while (done < 200) {
    const Vertex v = static_cast<Vertex>(uniform(rng, 0, 2));
    const NormalForm a = random_element(g, rng, 6), b = random_element(g, rng, 14);
    const TreeArc arc = tree_arc(g, v, a, b);
    if (length(g, arc) == 0) continue;
    ++done;
    const auto r = decompose_chain(g, arc);
    longest = std::max(longest, r.arc_length);
    decent += static_cast<int>(r.nu.size());
    const std::string where = "arc " + format(g, arc.p) + " to " + format(g, arc.q);
    if (!r.all_ok()) o.fail("bound violated on " + where);
    // μ and ν alternate and tile the arc.
    int at = 0;
    for (std::size_t i = 0; i < r.mu.size(); ++i) {
      if (r.mu[i].from != at || r.mu[i].to < r.mu[i].from) o.fail("segments do not tile " + where);
      at = r.mu[i].to;
      if (i < r.nu.size()) {
        if (r.nu[i].from != at || r.nu[i].to <= r.nu[i].from) o.fail("segments do not tile " + where);
        at = r.nu[i].to;
      }
    }
    if (r.mu.size() != r.nu.size() + 1 || at != r.arc_length) o.fail("segments do not cover " + where);
    if (!o.pass) return o;
  }
  o.detail = "200 arcs, longest " + std::to_string(longest) + ", " + std::to_string(decent) + " decent segments";
  return o;
}

// 6, 7 ---------------------------------------------------------------------

inline std::vector<int> defects(const DefGraph& g, const std::string& spec, int max_radius) {
  std::vector<int> out;
  for (const auto& r : cmp_defect_profile(g, parse_dls(g, spec), max_radius)) out.push_back(r.defect);
  return out;
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline Outcome twist_defect() {
  Outcome o;
  const auto d = defects(z2(), "twist v=b z=a", 5);
  if (d != std::vector<int>{1, 2, 3, 4, 5}) o.fail("defects " + join(d));
  else o.detail = "defects " + join(d);
  return o;
}

inline Outcome plateaus() {
  Outcome o;
  const auto fold = defects(free_ac(), "fold v=a z=c", 6);
  const auto pc = defects(path3(), "pc A=a,b B=b,c C=b z=a", 6);
  auto flat = [](const std::vector<int>& d) {
    return d.size() == 6 && std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
  };
  o.detail = "fold " + join(fold) + "; pc " + join(pc);
  if (!flat(fold) || !flat(pc)) o.fail(o.detail);
  return o;
}

// 8 ------------------------------------------------------------------------

inline Outcome outer_certificates() {
  Outcome o;
  const DefGraph t = z2(), f = free_ac();
  const auto ct = outer_order_certificate(t, parse_dls(t, "twist v=b z=a"), {parse_element(t, "b")}, 8);
  const auto cf = outer_order_certificate(f, parse_dls(f, "fold v=a z=c"), {parse_element(f, "a")}, 8);
  o.detail = "twist " + join(ct.traces.front()) + "; fold " + join(cf.traces.front());
  if (!ct.certified() || !cf.certified()) o.fail(o.detail);
  return o;
}

// 9 ------------------------------------------------------------------------

inline Outcome almost_stabilizers(Rng& rng) {
  Outcome o;
  std::vector<DefGraph> graphs;
  for (auto& g : small_graphs(4))
    if (g.size() >= 2) graphs.push_back(std::move(g));
  int done = 0, axial = 0, elements = 0, lox = 0;
  int tries = 0;
  while (done < 100 && tries < 100000) {
    ++tries;
    const DefGraph& g = pick(rng, graphs);
    const Vertex v = static_cast<Vertex>(uniform(rng, 0, g.size() - 1));
    const int r = g.clique_number();
    const int delta = uniform(rng, 1, 2);
    const int need = delta * (4 * r + 2);
    TreeArc arc;
    const bool along_axis = done % 2 == 0;
    if (along_axis) {
      // An arc on the axis of a short element h with v in its support; the
      // axis passes through x when h = x·core·x^-1.
      const NormalForm h = random_element(g, rng, 3);
      if (h.empty() || !support(h).contains(v)) continue;
      const int lh = tv_translation_length(g, v, h);
      if (lh == 0 || lh > delta) continue;
      const NormalForm x = cyclic_reduce(g, h).conjugator;
      const int k = (need + 2 * lh - 1) / (2 * lh);
      arc = tree_arc(g, v, multiply(g, power(g, h, -k), x), multiply(g, power(g, h, k), x));
    } else {
      arc = tree_arc(g, v, random_element(g, rng, 4), random_element(g, rng, 16));
    }
    const int len = length(g, arc);
    if (len < need || 2 * delta >= len) continue;
    const auto d = almost_stabilizer(g, arc, delta, 4);
    const auto rep = classify_almost_stabilizer(g, arc, delta, d.elements);
    ++done;
    if (along_axis) ++axial;
    elements += static_cast<int>(d.elements.size());
    lox += rep.loxodromic;
    if (!rep.ok || rep.sides.size() != d.elements.size()) {
      o.fail(rep.failure + " on arc " + format(g, arc.p) + " to " + format(g, arc.q) + " over " + show(g));
      return o;
    }
  }
  if (done < 100) o.fail("only " + std::to_string(done) + " samples found");
  else
    o.detail = "100 arcs (" + std::to_string(axial) + " axial), " + std::to_string(elements) + " elements, " +
               std::to_string(lox) + " loxodromic";
  return o;
}

// 10 -----------------------------------------------------------------------

inline std::optional<DlsAutomorphism> random_transvection(const DefGraph& g, Rng& rng) {
  const Vertex v = static_cast<Vertex>(uniform(rng, 0, g.size() - 1));
  VertexSet allowed;
  for (Vertex u = 0; u < g.size(); ++u)
    if (u != v && link(g, v).subset_of(star(g, u))) allowed.insert(u);
  if (allowed.empty()) return std::nullopt;
  const NormalForm z = random_word_on(g, rng, allowed, uniform(rng, 1, 4));
  if (z.empty()) return std::nullopt;
  return build_transvection(g, v, z);
}

inline int component_count(const DefGraph& g, VertexSet s, std::vector<VertexSet>& comps) {
  comps.clear();
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.least()), grow = comp;
    while (!grow.empty()) {
      VertexSet next;
      for (Vertex x : grow.members()) next |= link(g, x) & s;
      grow = next - comp;
      comp |= next;
    }
    comps.push_back(comp);
    left = left - comp;
  }
  return static_cast<int>(comps.size());
}

inline std::optional<DlsAutomorphism> random_partial_conjugation(const DefGraph& g, Rng& rng) {
  VertexSet c;
  for (Vertex x = 0; x < g.size(); ++x)
    if (uniform(rng, 0, 2) == 0) c.insert(x);
  std::vector<VertexSet> comps;
  if (component_count(g, g.all() - c, comps) < 2) return std::nullopt;
  // Split the components into two nonempty groups.
  VertexSet a = c, b = c;
  const int cut = uniform(rng, 1, static_cast<int>(comps.size()) - 1);
  std::shuffle(comps.begin(), comps.end(), rng);
  for (std::size_t i = 0; i < comps.size(); ++i) (static_cast<int>(i) < cut ? a : b) |= comps[i];
  const VertexSet allowed = a & perp_closed(g, c);
  if (allowed.empty()) return std::nullopt;
  const NormalForm z = random_word_on(g, rng, allowed, uniform(rng, 1, 4));
  if (z.empty()) return std::nullopt;
  return build_partial_conjugation(g, a, b, c, z);
}

inline Outcome automorphisms(Rng& rng) {
  Outcome o;
  const auto graphs = small_graphs(4);
  int done = 0, pcs = 0;
  std::set<DlsKind> kinds;
  while (done < 200) {
    const DefGraph& g = pick(rng, graphs);
    const bool want_pc = done % 2 == 1;
    auto phi = want_pc ? random_partial_conjugation(g, rng) : random_transvection(g, rng);
    if (!phi) continue;
    ++done;
    if (want_pc) ++pcs;
    kinds.insert(phi->kind);
    const std::string where = format(g, *phi) + " over " + show(g);
    const auto check = verify_automorphism(g, *phi);
    if (!check.ok) o.fail(check.diagnostic + " for " + where);
    for (int t = 0; t < 20 && o.pass; ++t) {
      const NormalForm x = random_element(g, rng, 8), y = random_element(g, rng, 8);
      if (apply(g, *phi, multiply(g, x, y)) != multiply(g, apply(g, *phi, x), apply(g, *phi, y)))
        o.fail("not a homomorphism on " + format(g, x) + ", " + format(g, y) + " for " + where);
    }
    if (!o.pass) return o;
  }
  o.detail = "200 automorphisms (" + std::to_string(pcs) + " partial conjugations, " + std::to_string(kinds.size()) +
             " kinds), 4000 products";
  return o;
}

// 11 -----------------------------------------------------------------------

/// Elements of `pool` commuting with every element of `with`; `with` should
/// be ShortLex sorted so that short generators reject early.
inline std::vector<NormalForm> commuting_with_all(const DefGraph& g, const std::vector<NormalForm>& pool,
                                                  const std::vector<NormalForm>& with) {
  std::vector<NormalForm> out;
  for (const auto& k : pool) {
    bool all = true;
    for (const auto& s : with)
      if (!commutes(g, k, s)) {
        all = false;
        break;
      }
    if (all) out.push_back(k);
  }
  return out;
}

inline Outcome double_centralizers(Rng& rng) {
  Outcome o;
  std::vector<DefGraph> graphs;
  for (auto& g : small_graphs(5))
    if (g.size() >= 2) graphs.push_back(std::move(g));
  int done = 0, cyclic = 0, central = 0;
  while (done < 50) {
    const DefGraph& g = pick(rng, graphs);
    const NormalForm base = random_element(g, rng, 1);
    const NormalForm a = random_normal_form(g, rng, uniform(rng, 2, 6));
    if (a.size() < 2 || !Heap(g, a.letters()).has_unique_ends()) continue;
    const auto p = make_pair(g, base, a.letters());
    if (!is_decent(g, p.word).decent) continue;
    const auto c = classify_decent_pair(g, p);
    if (c.kind == PairCase::unclassified) {
      o.fail("unclassified pair " + format(g, base) + " / " + format_word(g, p.word) + " over " + show(g));
      return o;
    }
    ++done;
    (c.kind == PairCase::cyclic_case ? cyclic : central)++;

    const auto b = ball(g, 4);
    std::vector<NormalForm> s;
    for (const auto& k : b)
      if (fixes(g, k, p.u) && fixes(g, k, p.w)) s.push_back(k);
    const auto z1 = commuting_with_all(g, b, s);
    const auto zz = commuting_with_all(g, b, z1);
    const std::set<NormalForm> sset(s.begin(), s.end()), zzset(zz.begin(), zz.end());
    const auto dc = double_centralizer(g, p, c);
    std::optional<CentralizerForm> cg;
    if (c.g) cg = centralizer(g, *c.g);
    const std::string where = format(g, base) + " / " + format_word(g, p.word) + " over " + show(g);
    for (const auto& k : b) {
      if (member(g, c.stabilizer, k) != sset.count(k)) o.fail("stabiliser mismatch at " + format(g, k) + " for " + where);
      if (member(g, dc, k) != zzset.count(k)) o.fail("double centraliser mismatch at " + format(g, k) + " for " + where);
      if (cg && membership_centralizer(g, *cg, k) != zzset.count(k))
        o.fail("cyclic case centraliser mismatch at " + format(g, k) + " for " + where);
      if (!o.pass) return o;
    }
    if (!c.skewer_bound_ok) o.fail("skewer bound fails for " + where);
    if (!o.pass) return o;
  }
  o.detail = "50 pairs (" + std::to_string(central) + " centraliser case, " + std::to_string(cyclic) + " cyclic case)";
  return o;
}

}  // namespace detail

struct Criterion {
  int id;
  const char* name;
  std::function<detail::Outcome(Rng&)> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "normal forms match the shuffle oracle", [](Rng&) { return detail::normal_forms(); }},
      {2, "medians match the halfspace majority", [](Rng&) { return detail::medians(); }},
      {3, "centraliser membership matches commutation", detail::centralizers},
      {4, "good decompositions stay within 7^V decent pieces", detail::good_decompositions},
      {5, "chain decompositions meet the length bounds", detail::chain_decompositions},
      {6, "twist defect grows linearly", [](Rng&) { return detail::twist_defect(); }},
      {7, "fold and partial conjugation defects plateau", [](Rng&) { return detail::plateaus(); }},
      {8, "twist and fold have increasing traces", [](Rng&) { return detail::outer_certificates(); }},
      {9, "almost stabilisers split by the dichotomy", detail::almost_stabilizers},
      {10, "random DLS automorphisms are homomorphisms", detail::automorphisms},
      {11, "double centralisers match the ball oracle", detail::double_centralizers},
  };
}

/// Runs the selected criteria (all when `only` is empty); each gets its own
/// generator derived from the seed and its id, so subsets are reproducible.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::set<int>& only = {},
                                                   const std::function<void(const CriterionResult&)>& report = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(c.id));
    CriterionResult r{c.id, c.name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto o = c.run(rng);
      r.pass = o.pass;
      r.detail = std::move(o.detail);
    } catch (const Error& e) {
      r.detail = std::string("error ") + e.code() + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format(const CriterionResult& r) {
  std::ostringstream s;
  s << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.name << " (" << std::fixed;
  s.precision(1);
  s << r.seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace raagtk::verify
