#include <random>

#include "common.hpp"

using namespace raagtk;
using namespace raagtk::testing;

namespace {

Word w(const DefGraph& g, const std::string& s) { return parse_word(g, s); }

}  // namespace

TEST(Decomp, Constants) {
  EXPECT_EQ(good_piece_bound(1, 3), BigInt(343));
  EXPECT_EQ(n_q(1, 2), BigInt(49));
  EXPECT_EQ(chain_length_bound(1, 3).str(), "83168786086");
  // q^q·max(7,2q)^{q²V} at q = 4, V = 1: 256·8^16.
  EXPECT_EQ(good_piece_bound(4, 1), pow_big(4, 4) * pow_big(8, 16));
}

TEST(Decomp, DeltaInvariants) {
  const auto f = free2();
  const auto p1 = make_pair(f, {}, w(f, "a a"));
  const auto d1 = delta_invariants(f, p1);
  EXPECT_EQ(f.format_set(d1.delta), "{a}");
  EXPECT_EQ(d1.delta_size, 1);
  EXPECT_EQ(d1.d[0], 0);

  const auto p = path3();
  const auto p2 = make_pair(p, {}, w(p, "a c a"));
  const auto d2 = delta_invariants(p, p2);
  EXPECT_EQ(p.format_set(d2.delta), "{a,c}");
  EXPECT_EQ(d2.d[static_cast<std::size_t>(p.vertex("c"))], 1);
  EXPECT_TRUE(is_join_irreducible(p, d2.delta));
}

TEST(Decomp, PairValidation) {
  const auto p = path3();
  auto code = [&](const std::string& s) {
    try {
      make_pair(p, {}, w(p, s));
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code("a"), "invalid_pair");
  EXPECT_EQ(code("a c c^-1 a"), "invalid_pair");
  // b commutes with a, so the second b-hyperplane does not lie beyond the a one.
  EXPECT_EQ(code("b a b"), "invalid_pair");
  EXPECT_EQ(code("a c a^-1"), "none");
}

TEST(Decomp, DeltaIsJoinIrreducibleForRandomPairs) {
  std::mt19937_64 rng(17);
  for (const auto& g : verify::small_graphs(4))
    for (int t = 0; t < 20; ++t) {
      const auto a = random_normal_form(g, rng, 2 + static_cast<int>(rng() % 5));
      if (a.size() < 2 || !Heap(g, a.letters()).has_unique_ends()) continue;
      const auto pr = make_pair(g, {}, a.letters());
      EXPECT_TRUE(is_join_irreducible(g, delta_invariants(g, pr).delta)) << format(g, a);
      // u and w are disjoint and every crossed hyperplane separates them.
      EXPECT_NE(pr.u, pr.w);
    }
}

TEST(Decomp, Decency) {
  const auto f = free2();
  EXPECT_TRUE(is_decent(f, w(f, "a a")).decent);
  const auto p = path3();
  const auto r = is_decent(p, w(p, "b"));
  EXPECT_TRUE(r.decent);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].from, 0u);
  EXPECT_EQ(r.witnesses[0].to, 1u);
  EXPECT_THROW(is_decent(p, w(p, "a a^-1")), Error);
}

TEST(Decomp, GoodAndExcellent) {
  const auto f = free2();
  const auto aaa = w(f, "a a a");
  EXPECT_TRUE(is_excellent(f, aaa, 0, 3));
  EXPECT_TRUE(is_good(f, aaa, 0, 3));
  const auto aba = w(f, "a b a");
  EXPECT_FALSE(is_excellent(f, aba, 0, 3));
  EXPECT_FALSE(is_good(f, aba, 0, 3));
  const auto aabb = w(f, "a a b b");
  EXPECT_TRUE(is_good(f, aabb, 0, 4));
}

TEST(Decomp, GoodDecompositionExamples) {
  const auto f = free2();
  auto d = decompose_good(f, w(f, "a a a"));
  ASSERT_EQ(d.pieces.size(), 1u);
  EXPECT_EQ(d.pieces[0].tag, PieceTag::good);
  d = decompose_good(f, w(f, "b"));
  ASSERT_EQ(d.pieces.size(), 1u);
  EXPECT_EQ(d.pieces[0].tag, PieceTag::edge);
  d = decompose_good(f, w(f, "a a b a a"));
  ASSERT_EQ(d.pieces.size(), 3u);
  EXPECT_EQ(d.pieces[1].begin, 2u);
  EXPECT_EQ(d.pieces[1].tag, PieceTag::edge);
  EXPECT_TRUE(d.within_bound);
  EXPECT_THROW(decompose_good(f, w(f, "a a^-1")), Error);
}

TEST(Decomp, GoodDecompositionProperties) {
  std::mt19937_64 rng(19);
  for (const auto& g : verify::small_graphs(4))
    for (int t = 0; t < 20; ++t) {
      const auto a = random_normal_form(g, rng, 1 + static_cast<int>(rng() % 12));
      const auto d = decompose_good(g, a.letters());
      EXPECT_LE(BigInt(d.pieces.size()), pow_big(7, static_cast<unsigned>(g.size())));
      std::size_t at = 0;
      for (const auto& p : d.pieces) {
        EXPECT_EQ(p.begin, at);
        at = p.end;
        if (p.tag == PieceTag::good) EXPECT_TRUE(is_good(g, a.letters(), p.begin, p.end));
        if (p.tag == PieceTag::edge) EXPECT_EQ(p.end - p.begin, 1u);
      }
      EXPECT_EQ(at, a.size());
    }
}

TEST(Decomp, ChainOfADecentArc) {
  const auto p = path3();
  const auto arc = tree_arc(p, p.vertex("a"), {}, nf(p, "a c a c a"));
  const auto r = decompose_chain(p, arc);
  EXPECT_EQ(r.arc_length, 3);
  ASSERT_EQ(r.nu.size(), 1u);
  ASSERT_EQ(r.mu.size(), 2u);
  EXPECT_EQ(r.mu[0].length(), 0);
  EXPECT_EQ(r.mu[1].length(), 0);
  EXPECT_EQ(r.nu[0].from, 0);
  EXPECT_EQ(r.nu[0].to, 3);
  EXPECT_TRUE(r.all_ok());
}

TEST(Decomp, ShortArcHasNoDecentSegment) {
  const auto p = path3();
  const auto arc = tree_arc(p, p.vertex("a"), {}, nf(p, "a c a"));
  const auto r = decompose_chain(p, arc);
  EXPECT_TRUE(r.nu.empty());
  ASSERT_EQ(r.mu.size(), 1u);
  EXPECT_EQ(r.mu[0].length(), 2);
  EXPECT_TRUE(r.all_ok());
  EXPECT_THROW(decompose_chain(p, tree_arc(p, p.vertex("a"), {}, nf(p, "c"))), Error);
}

TEST(Decomp, ClassifyCyclicCaseInZ2) {
  const auto e = z2();
  const auto pr = make_pair(e, {}, w(e, "a a"));
  const auto c = classify_decent_pair(e, pr);
  EXPECT_EQ(c.kind, PairCase::cyclic_case);
  ASSERT_TRUE(c.g.has_value());
  EXPECT_EQ(str(e, *c.g), "a");
  EXPECT_EQ(e.format_set(c.sigma), "{b}");
  EXPECT_EQ(e.format_set(c.closure), "{a,b}");
  EXPECT_TRUE(c.skewer_bound_ok);
  EXPECT_EQ(c.skewered, 2);
}

TEST(Decomp, ClassifyFreeGroupPairIsCentralizerCase) {
  // Δ = {a} has empty perp, and the double perp of ∅ in a free group is ∅.
  const auto f = free2();
  const auto c = classify_decent_pair(f, make_pair(f, {}, w(f, "a a")));
  EXPECT_EQ(c.kind, PairCase::centralizer_case);
  EXPECT_TRUE(c.sigma.empty());
  EXPECT_TRUE(c.closure.empty());
}

TEST(Decomp, ClassifyOnTheCone) {
  // Cone over the path: e is central, so it always joins the double perp.
  const auto g = DefGraph::parse("vertices: a b c e\nedge: a b\nedge: b c\nedge: a e\nedge: b e\nedge: c e\n");
  const auto c = classify_decent_pair(g, make_pair(g, {}, w(g, "a c a")));
  EXPECT_EQ(g.format_set(c.sigma), "{b,e}");
  EXPECT_EQ(c.kind, PairCase::centralizer_case);
  const auto dc = double_centralizer(g, make_pair(g, {}, w(g, "a c a")), c);
  EXPECT_EQ(format(g, dc), "conj=1 roots= support=b,e");
}
