#include <gtest/gtest.h>

#include <algorithm>

#include "dsrg/params.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

// Cayley digraph of S3 = <r, s> with connection set {r, s}: the smallest
// genuine DSRG, parameters (6,2,1,0,1).
Digraph smallest() {
  Digraph g(6);
  // Elements r^i s^j encoded as 2i + j.
  auto mul = [](int a, int b) {
    const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
    const int ii = ((j ? -k : k) + i + 3) % 3;
    return 2 * ii + (j ^ l);
  };
  for (int x = 0; x < 6; ++x) {
    g.add_arc(Point(x), Point(mul(x, 2)));
    g.add_arc(Point(x), Point(mul(x, 1)));
  }
  return g;
}

}  // namespace

TEST(Params, ComplementIsAnInvolution) {
  for (std::int64_t n = 6; n <= 40; ++n)
    for (const auto& p : enumerate_feasible(n, true, true)) {
      const auto c = complement_params(p);
      EXPECT_TRUE(is_feasible(c).ok) << p.to_string();
      EXPECT_EQ(complement_params(c), p);
      EXPECT_EQ(c.n, p.n);
      EXPECT_EQ(c.k, p.n - p.k - 1);
    }
  EXPECT_EQ(complement_params({6, 2, 1, 0, 1}), (DsrgParams{6, 3, 2, 1, 2}));
}

// The conditions do not see the complement: (8,5,4,3,3) passes them, yet its
// complement would have lambda = -1, so no such digraph exists. Every such
// set has 2k > n.
TEST(Params, SomeFeasibleSetsHaveImpossibleComplements) {
  const DsrgParams p{8, 5, 4, 3, 3};
  ASSERT_TRUE(is_feasible(p).ok);
  const auto c = complement_params(p);
  EXPECT_EQ(c, (DsrgParams{8, 2, 1, -1, 1}));
  EXPECT_FALSE(is_feasible(c).ok);
  for (std::int64_t n = 2; n <= 80; ++n)
    for (const auto& q : enumerate_feasible(n, true, false))
      if (!is_feasible(complement_params(q)).ok) EXPECT_GT(2 * q.k, q.n) << q.to_string();
}

TEST(Params, FeasibleImpliesSpectralConditions) {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (const auto& p : enumerate_feasible(n, true, false)) {
      EXPECT_TRUE(oracle::spectrum_feasible(p)) << p.to_string();
      EXPECT_TRUE(p.genuine());
    }
}

TEST(Params, EnumerationIsExhaustiveForTheConditions) {
  // Brute force over the whole box must agree with the enumerator.
  for (std::int64_t n = 2; n <= 24; ++n) {
    std::vector<DsrgParams> brute;
    for (std::int64_t k = 0; k < n; ++k)
      for (std::int64_t t = 0; t <= k; ++t)
        for (std::int64_t l = 0; l <= k; ++l)
          for (std::int64_t m = 0; m <= k; ++m)
            if (is_feasible({n, k, t, l, m}).ok) brute.push_back({n, k, t, l, m});
    auto listed = enumerate_feasible(n, true, false);
    std::sort(brute.begin(), brute.end());
    std::sort(listed.begin(), listed.end());
    EXPECT_EQ(brute, listed) << "n = " << n;
  }
}

TEST(Params, HalfOnlyKeepsOneOfEachComplementPair) {
  for (std::int64_t n = 6; n <= 50; ++n) {
    const auto all = enumerate_feasible(n, true, false);
    const auto half = enumerate_feasible(n, true, true);
    for (const auto& p : half) EXPECT_LT(2 * p.k, n);
    for (const auto& p : all)
      if (2 * p.k < n) EXPECT_NE(std::find(half.begin(), half.end(), p), half.end());
  }
}

TEST(Params, KnownSets) {
  EXPECT_TRUE(is_feasible({6, 2, 1, 0, 1}).ok);
  EXPECT_EQ(is_feasible({6, 2, 1, 0, 1}).d, 1);
  EXPECT_TRUE(is_feasible({14, 5, 4, 1, 2}).ok);
  EXPECT_FALSE(is_feasible({6, 2, 1, 1, 1}).ok);
  EXPECT_FALSE(is_feasible({6, 2, 1, 1, 1}).reason.empty());
  EXPECT_FALSE(is_feasible({10, 3, 3, 0, 1}).ok);  // t == k is an SRG
}

TEST(Verify, AgreesWithDenseOracle) {
  const auto g = smallest();
  const auto v = verify(g);
  ASSERT_TRUE(v) << v.reason;
  EXPECT_EQ(*v.params, (DsrgParams{6, 2, 1, 0, 1}));
  EXPECT_EQ(oracle::dsrg_params(g), v.params);
  const auto c = verify(complement(g));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c.params, complement_params(*v.params));
  EXPECT_EQ(verify(reverse(g)).params, v.params);
}

TEST(Verify, RandomDigraphsMatchOracle) {
  std::mt19937_64 rng(11);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    // Random circulants are regular, so some of them pass.
    Digraph g(n);
    std::vector<Point> conn;
    for (Point s = 1; s < n; ++s)
      if (rng() % 2) conn.push_back(s);
    if (conn.empty() || conn.size() == n - 1) continue;  // lambda or mu undetermined
    for (Point x = 0; x < n; ++x)
      for (Point s : conn) g.add_arc(x, Point((x + s) % n));
    if (trial % 3 == 0 && g.arc_count() > 0) {
      const auto arcs = g.arcs();
      const auto [u, v] = arcs[rng() % arcs.size()];
      g.remove_arc(u, v);
    }
    const auto fast = verify(g);
    const auto slow = oracle::dsrg_params(g);
    ASSERT_EQ(fast.params.has_value(), slow.has_value()) << trial;
    if (fast) {
      ++accepted;
      EXPECT_EQ(*fast.params, *slow);
    } else {
      EXPECT_FALSE(fast.reason.empty());
    }
  }
  EXPECT_GT(accepted, 10);
}

TEST(Verify, ReportsIrregularity) {
  Digraph g(3);
  g.add_arc(0, 1);
  const auto v = verify(g);
  EXPECT_FALSE(v);
  EXPECT_NE(v.reason.find("degree"), std::string::npos);
}

TEST(Verify, SquareCountsAreTwoPaths) {
  const auto g = smallest();
  const auto sq = square_counts(g);
  for (Point x = 0; x < 6; ++x)
    for (Point y = 0; y < 6; ++y) {
      std::uint32_t c = 0;
      for (Point z = 0; z < 6; ++z) c += g.has_arc(x, z) && g.has_arc(z, y);
      EXPECT_EQ(sq[x * 6 + y], c);
    }
}
