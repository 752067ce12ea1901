#include <random>

#include "common.hpp"

using namespace raagtk;
using namespace raagtk::testing;

TEST(Subgroups, Validate) {
  const auto p = path3();
  EXPECT_TRUE(validate(p, parse_subgroup(p, "conj=1 roots= support=a")).ok);
  const auto e = z2();
  EXPECT_TRUE(validate(e, parse_subgroup(e, "conj=1 roots=a support=b")).ok);
  const auto proper = validate(e, parse_subgroup(e, "conj=1 roots=a.a support=b"));
  EXPECT_FALSE(proper.ok);
  EXPECT_FALSE(proper.diagnostic.empty());
  // Roots must be orthogonal to the support and to each other.
  EXPECT_FALSE(validate(p, parse_subgroup(p, "conj=1 roots=a support=c")).ok);
  EXPECT_FALSE(validate(p, parse_subgroup(p, "conj=1 roots=a,c support=")).ok);
  EXPECT_TRUE(validate(p, parse_subgroup(p, "conj=1 roots=a.c support=b")).ok);
}

TEST(Subgroups, ParseAndFormat) {
  const auto p = path3();
  const auto sf = parse_subgroup(p, "conj=c.a roots=b support=a,c");
  EXPECT_EQ(sf.kind, SubgroupKind::semi_parabolic);
  EXPECT_EQ(format(p, sf), "conj=c.a roots=b support=a,c");
  EXPECT_EQ(parse_subgroup(p, "support=b").kind, SubgroupKind::parabolic);
  EXPECT_THROW(parse_subgroup(p, "conj"), Error);
  EXPECT_THROW(parse_subgroup(p, "colour=red"), Error);
}

TEST(Subgroups, Member) {
  const auto e = z2();
  const auto sf = parse_subgroup(e, "conj=1 roots=a support=");
  EXPECT_TRUE(member(e, sf, nf(e, "a a")));
  EXPECT_FALSE(member(e, sf, nf(e, "b")));
  EXPECT_THROW(member(e, parse_subgroup(e, "conj=1 roots=a.a support="), nf(e, "a")), Error);
}

TEST(Subgroups, MembershipMatchesGeneratedBall) {
  std::mt19937_64 rng(4);
  for (const auto& g : verify::small_graphs(3))
    for (int t = 0; t < 6; ++t) {
      const NormalForm x = random_element(g, rng, 1);
      VertexSet delta;
      for (Vertex v = 0; v < g.size(); ++v)
        if (rng() % 2) delta.insert(v);
      const auto sf = parabolic(x, delta);
      const auto gen = verify::generated_ball(g, generators(g, sf), 5);
      const std::set<NormalForm> in(gen.begin(), gen.end());
      for (const auto& k : ball(g, 3)) ASSERT_EQ(member(g, sf, k), in.count(k) == 1) << format(g, sf);
    }
}

TEST(Subgroups, SemiParabolicMembershipIsSound) {
  const auto g = DefGraph::parse("vertices: a b c d\nedge: a d\nedge: b d\n");
  const auto sf = parse_subgroup(g, "conj=c roots=a.b support=d");
  ASSERT_TRUE(validate(g, sf).ok);
  for (const auto& k : verify::generated_ball(g, generators(g, sf), 3)) EXPECT_TRUE(member(g, sf, k));
  EXPECT_FALSE(member(g, sf, conjugate(g, nf(g, "c"), nf(g, "a"))));
}

TEST(Subgroups, Intersections) {
  const auto e = z2();
  auto r = intersect(e, parse_subgroup(e, "roots=a"), parse_subgroup(e, "roots=b"), 3);
  EXPECT_TRUE(r.support.empty());
  EXPECT_TRUE(r.abelian_roots.empty());

  const auto p = path3();
  r = intersect(p, parse_subgroup(p, "support=a,b"), parse_subgroup(p, "support=b,c"), 3);
  EXPECT_EQ(format(p, r), "conj=1 roots= support=b");
}

TEST(Subgroups, IntersectionMatchesBothMemberships) {
  std::mt19937_64 rng(8);
  for (const auto& g : verify::small_graphs(3))
    for (int t = 0; t < 5; ++t) {
      auto random_parabolic = [&] {
        VertexSet d;
        for (Vertex v = 0; v < g.size(); ++v)
          if (rng() % 2) d.insert(v);
        return parabolic(random_element(g, rng, 1), d);
      };
      const auto a = random_parabolic(), b = random_parabolic();
      const auto r = intersect(g, a, b, 4);
      for (const auto& k : ball(g, 3))
        ASSERT_EQ(member(g, r, k), member(g, a, k) && member(g, b, k))
            << format(g, a) << " & " << format(g, b) << " at " << format(g, k);
    }
}

TEST(Subgroups, ReduceConjugatorKeepsTheSubgroup) {
  const auto p = path3();
  const auto sf = parse_subgroup(p, "conj=c.a.b support=a,b");
  const auto r = reduce_conjugator(p, sf);
  EXPECT_EQ(str(p, r.conjugator), "c");
  EXPECT_TRUE(same_subgroup(p, sf, r));
}

TEST(Subgroups, ParabolicDirections) {
  const auto f = free2();
  const auto sf = parse_subgroup(f, "support=a");
  EXPECT_TRUE(parabolic_direction_check(f, nf(f, "a"), {}, sf));
  // b·a·b^-1 is not in A_{a}: the precondition fails.
  EXPECT_THROW(parabolic_direction_check(f, nf(f, "a"), nf(f, "b"), sf), Error);

  const auto p = path3();
  const auto ab = parse_subgroup(p, "conj=c support=a,b");
  int checked = 0;
  for (const auto& h : ball(p, 4)) {
    if (h.empty()) continue;
    const auto x = nf(p, "c");
    if (!member(p, ab, conjugate(p, x, cyclic_reduce(p, h).core))) continue;
    ++checked;
    EXPECT_TRUE(parabolic_direction_check(p, h, x, ab)) << format(p, h);
  }
  EXPECT_GT(checked, 10);
}
