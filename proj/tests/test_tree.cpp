#include <random>

#include "common.hpp"

using namespace raagtk;
using namespace raagtk::testing;

TEST(Tree, Distance) {
  const auto p = path3();
  const Vertex b = p.vertex("b");
  const auto x = nf(p, "a c b");
  EXPECT_EQ(tv_distance(p, b, x, x), 0);
  EXPECT_EQ(tv_distance(p, b, {}, nf(p, "a b c b")), 2);
  EXPECT_EQ(tv_distance(p, b, {}, nf(p, "a c")), 0);
}

TEST(Tree, DistanceMatchesZeroOneSearch) {
  for (const auto& g : verify::small_graphs(3))
    for (Vertex v = 0; v < g.size(); ++v)
      for (const auto& h : ball(g, 3)) ASSERT_EQ(tv_distance(g, v, {}, h), verify::tree_distance_by_bfs(g, v, h, 3));
}

TEST(Tree, DistanceIsEquivariantAndMetric) {
  std::mt19937_64 rng(6);
  for (const auto& g : verify::small_graphs(4))
    for (int t = 0; t < 20; ++t) {
      const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(g.size()));
      const auto x = random_element(g, rng, 6), y = random_element(g, rng, 6), z = random_element(g, rng, 6),
                 k = random_element(g, rng, 4);
      EXPECT_EQ(tv_distance(g, v, x, y), tv_distance(g, v, multiply(g, k, x), multiply(g, k, y)));
      EXPECT_EQ(tv_distance(g, v, x, y), tv_distance(g, v, y, x));
      EXPECT_LE(tv_distance(g, v, x, z), tv_distance(g, v, x, y) + tv_distance(g, v, y, z));
    }
}

TEST(Tree, TranslationLength) {
  const auto p = path3();
  const Vertex b = p.vertex("b");
  EXPECT_EQ(tv_translation_length(p, b, nf(p, "a c")), 0);
  EXPECT_EQ(tv_translation_length(p, b, nf(p, "a b")), 1);
  EXPECT_EQ(tv_translation_length(p, b, nf(p, "c b b c^-1")), 2);
}

TEST(Tree, TranslationLengthIsMinimalDisplacement) {
  // On a tree the translation length is attained on the axis and never beaten.
  std::mt19937_64 rng(12);
  for (const auto& g : verify::small_graphs(3))
    for (int t = 0; t < 15; ++t) {
      const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(g.size()));
      const auto k = random_element(g, rng, 5);
      int least = 1 << 20;
      for (const auto& x : ball(g, 3)) least = std::min(least, displacement(g, k, tree_vertex(g, v, x)));
      EXPECT_EQ(least, tv_translation_length(g, v, k)) << format(g, k);
    }
}

TEST(Tree, EdgeStabilizer) {
  const auto p = path3();
  const auto arc = tree_arc(p, p.vertex("b"), {}, nf(p, "b"));
  EXPECT_EQ(length(p, arc), 1);
  EXPECT_EQ(format(p, arc_stabilizer(p, arc)), "conj=1 roots= support=a,c");
}

TEST(Tree, ParallelHyperplanesInZ2) {
  const auto e = z2();
  const auto arc = tree_arc(e, e.vertex("a"), {}, nf(e, "a a"));
  EXPECT_EQ(length(e, arc), 2);
  EXPECT_EQ(format(e, arc_stabilizer(e, arc)), "conj=1 roots= support=b");
}

TEST(Tree, ArcStabilizerMatchesBall) {
  std::mt19937_64 rng(13);
  for (const auto& g : verify::small_graphs(3))
    for (int t = 0; t < 8; ++t) {
      const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(g.size()));
      const auto arc = tree_arc(g, v, random_element(g, rng, 2), random_element(g, rng, 5));
      if (length(g, arc) == 0) continue;
      const auto sf = arc_stabilizer(g, arc);
      for (const auto& k : ball(g, 4))
        ASSERT_EQ(member(g, sf, k), fixes_arc(g, k, arc)) << format(g, arc.p) << " to " << format(g, arc.q);
    }
}

TEST(Tree, AlmostStabilizer) {
  const auto e = z2();
  const auto arc = tree_arc(e, e.vertex("a"), {}, nf(e, "a a a"));
  const auto d = almost_stabilizer(e, arc, 1, 3);
  EXPECT_TRUE(std::count(d.elements.begin(), d.elements.end(), nf(e, "a")));
  EXPECT_FALSE(std::count(d.elements.begin(), d.elements.end(), nf(e, "a a")));

  const auto d0 = almost_stabilizer(e, arc, 0, 3);
  for (const auto& k : d0.elements) EXPECT_TRUE(fixes_arc(e, k, arc));
  EXPECT_THROW(almost_stabilizer(e, arc, 2, 3), Error);
}

TEST(Tree, DichotomyOnAnAxis) {
  const auto f = free2();
  const auto arc = tree_arc(f, f.vertex("a"), nf(f, "a^-3"), nf(f, "a a a"));
  const auto d = almost_stabilizer(f, arc, 1, 4);
  const auto rep = classify_almost_stabilizer(f, arc, 1, d.elements);
  EXPECT_TRUE(rep.ok) << rep.failure;
  EXPECT_EQ(rep.loxodromic, 2);
  ASSERT_TRUE(rep.axis_root.has_value());
  EXPECT_EQ(str(f, *rep.axis_root), "a^-1");
}

TEST(Tree, TrimShortensBothEnds) {
  const auto f = free2();
  const auto arc = tree_arc(f, f.vertex("a"), {}, nf(f, "a b a b a b a"));
  EXPECT_EQ(length(f, arc), 4);
  const auto t = trim(f, arc, 2);
  EXPECT_EQ(length(f, t), 2);
  EXPECT_EQ(tv_distance(f, arc.p, t.p), 1);
  EXPECT_EQ(tv_distance(f, arc.q, t.q), 1);
}
