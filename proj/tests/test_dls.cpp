#include <random>

#include "common.hpp"
#include "raagtk/selftest/acceptance.hpp"

using namespace raagtk;
using namespace raagtk::testing;

TEST(Dls, FreeFold) {
  const auto f = free_ac();
  const auto phi = build_transvection(f, f.vertex("a"), nf(f, "c"));
  EXPECT_EQ(phi.kind, DlsKind::fold);
  EXPECT_EQ(str(f, phi.images[0]), "c a");
  EXPECT_EQ(str(f, phi.images[1]), "c");
}

TEST(Dls, PathTwist) {
  const auto p = path3();
  const auto phi = build_transvection(p, p.vertex("a"), nf(p, "b"));
  EXPECT_EQ(phi.kind, DlsKind::twist);
  EXPECT_EQ(str(p, apply(p, phi, nf(p, "a"))), "a b");
  EXPECT_EQ(apply(p, phi, nf(p, "a a")), nf(p, "b a b a"));
}

TEST(Dls, PathTransvectionByFarVertexIsAFold) {
  // lk a = {b} and c commutes with b, so a ↦ c·a is a valid fold.
  const auto p = path3();
  const auto phi = build_transvection(p, p.vertex("a"), nf(p, "c"));
  EXPECT_EQ(phi.kind, DlsKind::fold);
  EXPECT_TRUE(verify_automorphism(p, phi).ok);
}

TEST(Dls, RejectsNonCentralMultiplier) {
  const auto s = square();
  try {
    build_transvection(s, s.vertex("a"), nf(s, "b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not_in_centralizer");
  }
  EXPECT_THROW(build_transvection(s, s.vertex("a"), nf(s, "a")), Error);
}

TEST(Dls, PartialConjugation) {
  const auto p = path3();
  const auto phi = parse_dls(p, "pc A=a,b B=b,c C=b z=a");
  EXPECT_EQ(phi.kind, DlsKind::partial_conjugation);
  EXPECT_EQ(str(p, phi.images[2]), "a c a^-1");
  EXPECT_TRUE(verify_automorphism(p, phi).ok);
  EXPECT_EQ(format(p, phi), "pc A=a,b B=b,c C=b z=a");
}

TEST(Dls, PartialConjugationValidation) {
  const auto p = path3();
  auto code = [&](const std::string& spec) {
    try {
      parse_dls(p, spec);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code("pc A=a,b B=a,b C=a,b z=a"), "not_visual_splitting");
  EXPECT_EQ(code("pc A=a,b B=c C= z=a"), "not_visual_splitting");
  EXPECT_EQ(code("pc A=a,b B=b,c C=b z=c"), "not_in_centralizer");
  EXPECT_EQ(code("twist v=a z=c"), "precondition");
  EXPECT_EQ(code("spin v=a z=c"), "parse_error");
  EXPECT_EQ(code("pc A=a,b z=a"), "parse_error");
}

TEST(Dls, IdentityMultiplier) {
  const auto p = path3();
  const auto phi = parse_dls(p, "pc A=a,b B=b,c C=b z=1");
  EXPECT_EQ(phi.images, identity_images(p));
  EXPECT_TRUE(apply(p, phi, {}).empty());
}

TEST(Dls, InverseAndComposition) {
  const auto e = z2();
  const auto phi = parse_dls(e, "twist v=b z=a");
  const auto inv = inverse(e, phi);
  EXPECT_EQ(compose(e, phi.images, inv.images), identity_images(e));
  const auto sq = compose(e, phi.images, phi.images);
  EXPECT_EQ(str(e, sq[1]), "a a b");
}

TEST(Dls, VerifyRejectsBadMaps) {
  const auto f = free2();
  DlsAutomorphism bad = build_transvection(f, 0, nf(f, "b"));
  bad.images = {nf(f, "b"), nf(f, "b")};
  EXPECT_FALSE(verify_automorphism(f, bad).ok);

  const auto e = z2();
  DlsAutomorphism broken = parse_dls(e, "twist v=b z=a");
  broken.images[0] = nf(e, "a a");  // still a homomorphism, not undone by the inverse
  EXPECT_FALSE(verify_automorphism(e, broken).ok);
}

TEST(Dls, RandomAutomorphismsAreSound) {
  verify::Rng rng(21);
  const auto graphs = verify::small_graphs(4);
  int built = 0;
  for (int t = 0; t < 400 && built < 60; ++t) {
    const auto& g = verify::detail::pick(rng, graphs);
    auto phi = t % 2 ? verify::detail::random_partial_conjugation(g, rng) : verify::detail::random_transvection(g, rng);
    if (!phi) continue;
    ++built;
    ASSERT_TRUE(verify_automorphism(g, *phi).ok) << format(g, *phi);
    const auto x = random_element(g, rng, 6);
    EXPECT_EQ(apply(g, inverse(g, *phi), apply(g, *phi, x)), x);
  }
  EXPECT_EQ(built, 60);
}

TEST(Dls, OuterCertificates) {
  const auto e = z2();
  const auto twist = outer_order_certificate(e, parse_dls(e, "twist v=b z=a"), {nf(e, "b")}, 8);
  EXPECT_TRUE(twist.certified());
  EXPECT_EQ(twist.traces[0], (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));

  const auto f = free_ac();
  const auto fold = outer_order_certificate(f, parse_dls(f, "fold v=a z=c"), {nf(f, "a")}, 8);
  EXPECT_TRUE(fold.certified());
  EXPECT_EQ(fold.outer_powers.size(), 8u);

  const auto p = path3();
  const auto id = outer_order_certificate(p, parse_dls(p, "pc A=a,b B=b,c C=b z=1"), {nf(p, "a"), nf(p, "c")}, 4);
  EXPECT_FALSE(id.certified());
  EXPECT_TRUE(id.outer_powers.empty());
  EXPECT_THROW(outer_order_certificate(p, parse_dls(p, "pc A=a,b B=b,c C=b z=1"), {}, 4), Error);
}

TEST(Dls, InnerPartialConjugationHasFlatTraces) {
  // Conjugating c by a while fixing a and b is conjugation by a.
  const auto p = path3();
  const auto phi = parse_dls(p, "pc A=a,b B=b,c C=b z=a");
  const auto cert = outer_order_certificate(p, phi, {nf(p, "a c")}, 6);
  EXPECT_FALSE(cert.certified());
}
