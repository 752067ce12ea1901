#include <random>

#include "common.hpp"

using namespace raagtk;
using namespace raagtk::testing;

TEST(Median, Examples) {
  const auto g = z2();
  EXPECT_EQ(str(g, median(g, {}, nf(g, "a b"), nf(g, "a b^-1"))), "a");
  const auto p = path3();
  const auto x = nf(p, "a c"), y = nf(p, "c a");
  EXPECT_EQ(median(p, x, x, y), x);
  EXPECT_EQ(median(p, y, x, x), x);
}

TEST(Median, Axioms) {
  std::mt19937_64 rng(7);
  for (const auto& g : verify::small_graphs(4))
    for (int t = 0; t < 30; ++t) {
      const auto x = random_element(g, rng, 6), y = random_element(g, rng, 6), z = random_element(g, rng, 6);
      const auto m = median(g, x, y, z);
      EXPECT_EQ(m, median(g, y, x, z));
      EXPECT_EQ(m, median(g, z, y, x));
      EXPECT_EQ(m, median(g, y, z, x));
      EXPECT_EQ(median(g, x, x, y), x);
      // m lies on geodesics between each pair.
      EXPECT_EQ(distance(g, x, m) + distance(g, m, y), distance(g, x, y));
      EXPECT_EQ(distance(g, x, m) + distance(g, m, z), distance(g, x, z));
      EXPECT_EQ(distance(g, y, m) + distance(g, m, z), distance(g, y, z));
      // Equivariance.
      const auto k = random_element(g, rng, 4);
      EXPECT_EQ(median(g, multiply(g, k, x), multiply(g, k, y), multiply(g, k, z)), multiply(g, k, m));
    }
}

TEST(Median, MatchesHalfspaceMajorityOnSmallBalls) {
  for (const auto& g : verify::small_graphs(3)) {
    verify::MajorityMedianOracle oracle(g, 3);
    const auto b = ball(g, 2);
    std::vector<std::vector<int>> w;
    for (const auto& p : b) w.push_back(oracle.walls(p));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k) {
          const auto want = oracle.lookup(verify::MajorityMedianOracle::majority(w[i], w[j], w[k]));
          ASSERT_TRUE(want.has_value());
          ASSERT_EQ(median(g, b[i], b[j], b[k]), *want);
        }
  }
}

TEST(Closure, Singleton) {
  const auto g = z2();
  const auto r = subalgebra_closure(g, {{nf(g, "a")}});
  ASSERT_EQ(r.elements.size(), 1u);
  EXPECT_FALSE(r.truncated);
}

TEST(Closure, CollinearChain) {
  const auto g = free2();
  const auto r = subalgebra_closure(g, {{nf(g, "1")}, {nf(g, "a")}, {nf(g, "a a")}});
  EXPECT_EQ(r.elements.size(), 3u);
}

TEST(Closure, SquareCornersAreMedianClosed) {
  // Medians in Z² are coordinatewise, so corners of a square stay closed.
  const auto g = z2();
  const auto r = subalgebra_closure(g, {{nf(g, "1")}, {nf(g, "a a")}, {nf(g, "b b")}, {nf(g, "a a b b")}});
  EXPECT_EQ(r.elements.size(), 4u);
}

TEST(Closure, TripodGainsItsCentre) {
  const auto g = free2();
  const auto r = subalgebra_closure(g, {{nf(g, "a a")}, {nf(g, "b b")}, {nf(g, "a^-1")}});
  ASSERT_EQ(r.elements.size(), 4u);
  EXPECT_TRUE(r.elements.front().front().empty());
}

TEST(Closure, TuplesAreCoordinatewise) {
  const auto g = free2();
  const auto r = subalgebra_closure(g, {{nf(g, "a"), nf(g, "1")}, {nf(g, "b"), nf(g, "b")}, {nf(g, "1"), nf(g, "a")}});
  // The new tuple is (m(a,b,1), m(1,b,a)) = (1, 1).
  EXPECT_EQ(r.elements.size(), 4u);
}

TEST(Closure, ArityMismatch) {
  const auto g = free2();
  try {
    subalgebra_closure(g, {{nf(g, "a")}, {nf(g, "a"), nf(g, "b")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "arity_mismatch");
  }
}

TEST(Closure, TruncatesAtCap) {
  const auto g = free2();
  std::vector<Tuple> s;
  for (const auto& p : ball(g, 2)) s.push_back({p, invert(g, p)});
  const auto r = subalgebra_closure(g, s, 20);
  EXPECT_TRUE(r.truncated);
}

TEST(Closure, ResultIsMedianClosed) {
  const auto g = path3();
  const auto r = subalgebra_closure(g, {{nf(g, "a c")}, {nf(g, "c a")}, {nf(g, "b")}, {nf(g, "a^-1")}});
  std::set<NormalForm> all;
  for (const auto& t : r.elements) all.insert(t.front());
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) EXPECT_TRUE(all.count(median(g, x, y, z)));
}
