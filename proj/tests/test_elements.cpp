#include <random>

#include "common.hpp"

using namespace raagtk;
using namespace raagtk::testing;

TEST(Elements, Gamma) {
  const auto p = path3();
  EXPECT_EQ(p.format_set(gamma(p, nf(p, "c a c^-1"))), "{a}");
  const auto e = z2();
  EXPECT_EQ(e.format_set(gamma(e, nf(e, "a b"))), "{a,b}");
  EXPECT_TRUE(gamma(e, {}).empty());
}

TEST(Elements, LabelIrreducibleComponents) {
  const auto e = z2();
  const auto li = li_components(e, nf(e, "a b"));
  ASSERT_EQ(li.components.size(), 2u);
  EXPECT_EQ(str(e, li.components[0]), "a");
  EXPECT_EQ(str(e, li.components[1]), "b");

  const auto p = path3();
  const auto one = li_components(p, nf(p, "a c"));
  ASSERT_EQ(one.components.size(), 1u);
  EXPECT_EQ(str(p, one.components[0]), "a c");
  EXPECT_TRUE(is_label_irreducible(p, nf(p, "a c")));
  EXPECT_FALSE(is_label_irreducible(e, nf(e, "a b")));
  EXPECT_THROW(li_components(p, {}), Error);
}

TEST(Elements, ComponentsCommuteAndMultiplyBack) {
  std::mt19937_64 rng(2);
  for (const auto& g : verify::small_graphs(4))
    for (int t = 0; t < 20; ++t) {
      auto x = random_element(g, rng, 8);
      if (x.empty()) continue;
      const auto li = li_components(g, x);
      NormalForm prod;
      for (std::size_t i = 0; i < li.components.size(); ++i) {
        prod = multiply(g, prod, li.components[i]);
        EXPECT_TRUE(is_label_irreducible(g, li.components[i]));
        for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(commutes(g, li.components[i], li.components[j]));
      }
      EXPECT_EQ(prod, x);
    }
}

TEST(Elements, PrimitiveRoot) {
  const auto f = free2();
  auto r = primitive_root(f, nf(f, "a a"));
  EXPECT_EQ(str(f, r.root), "a");
  EXPECT_EQ(r.exponent, 2);
  const auto e = z2();
  r = primitive_root(e, nf(e, "a b a b"));
  EXPECT_EQ(str(e, r.root), "a b");
  EXPECT_EQ(r.exponent, 2);
  r = primitive_root(f, nf(f, "a b"));
  EXPECT_EQ(r.exponent, 1);
  // Interleaved letters: (a c b)^2 with a, b commuting.
  const auto g = DefGraph::parse("vertices: a b c\nedge: a b\n");
  const auto w = power(g, nf(g, "a c b"), 2);
  r = primitive_root(g, w);
  EXPECT_EQ(r.exponent, 2);
  EXPECT_EQ(power(g, r.root, 2), w);
  EXPECT_THROW(primitive_root(f, {}), Error);
}

TEST(Elements, PrimitiveRootMatchesPowerSearch) {
  for (const auto& g : verify::small_graphs(3))
    for (const auto& x : ball(g, 4)) {
      if (x.empty()) continue;
      const auto r = primitive_root(g, x);
      ASSERT_EQ(power(g, r.root, r.exponent), x) << format(g, x);
      ASSERT_EQ(r.exponent, verify::max_power_by_search(g, x)) << format(g, x);
    }
}

TEST(Elements, Commutes) {
  const auto p = path3();
  const auto x = nf(p, "a c b");
  EXPECT_TRUE(commutes(p, x, power(p, x, 2)));
  EXPECT_TRUE(commutes(z2(), nf(z2(), "a"), nf(z2(), "b")));
  EXPECT_FALSE(commutes(p, nf(p, "a"), nf(p, "c")));
}

TEST(Elements, CentralizerForms) {
  const auto p = path3();
  auto cf = centralizer(p, nf(p, "b"));
  ASSERT_EQ(cf.cyclic_roots.size(), 1u);
  EXPECT_EQ(str(p, cf.cyclic_roots[0]), "b");
  EXPECT_EQ(p.format_set(cf.parabolic_support), "{a,c}");

  const auto e = z2();
  cf = centralizer(e, nf(e, "a"));
  EXPECT_EQ(str(e, cf.cyclic_roots[0]), "a");
  EXPECT_EQ(e.format_set(cf.parabolic_support), "{b}");

  const auto f = free2();
  cf = centralizer(f, nf(f, "a b"));
  EXPECT_EQ(str(f, cf.cyclic_roots[0]), "a b");
  EXPECT_TRUE(cf.parabolic_support.empty());
  EXPECT_THROW(centralizer(f, {}), Error);
}

TEST(Elements, CentralizerMembership) {
  const auto p = path3();
  const auto b = nf(p, "b");
  const auto cf = centralizer(p, b);
  EXPECT_TRUE(membership_centralizer(p, cf, b));
  EXPECT_TRUE(membership_centralizer(p, cf, nf(p, "a c a^-1")));
  for (const auto& h : ball(p, 4)) EXPECT_EQ(membership_centralizer(p, cf, h), commutes(p, b, h));
}

TEST(Elements, CentralizerMembershipOfConjugates) {
  const auto p = path3();
  const auto x = nf(p, "c a b c^-1");
  const auto cf = centralizer(p, x);
  for (const auto& h : ball(p, 4)) ASSERT_EQ(membership_centralizer(p, cf, h), commutes(p, x, h)) << format(p, h);
}

TEST(Elements, IncreasingLabels) {
  const auto f = free2();
  auto k = increasing_labels_search(f, nf(f, "a"), nf(f, "b"), 3);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(f.format_set(gamma(f, *k)), "{a,b}");
  const auto p = path3();
  k = increasing_labels_search(p, nf(p, "a"), nf(p, "c"), 3);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(p.format_set(gamma(p, *k)), "{a,c}");
}
