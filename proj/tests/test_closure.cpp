#include <gtest/gtest.h>

#include <random>

#include "dsrg/closure.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/perm.hpp"
#include "dsrg/search.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

Digraph cycle(std::size_t n) {
  Digraph g(n);
  for (Point x = 0; x < n; ++x) g.add_arc(x, Point((x + 1) % n));
  return g;
}

Digraph petersen() {
  Digraph g(10);
  auto edge = [&](Point a, Point b) {
    g.add_arc(a, b);
    g.add_arc(b, a);
  };
  for (Point i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(i, i + 5);
    edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST(Closure, DirectedCycleGivesCyclicScheme) {
  const auto cfg = coherent_closure(cycle(7));
  EXPECT_EQ(cfg.rank(), 7u);
  EXPECT_TRUE(cfg.homogeneous());
  EXPECT_EQ(cfg.color(3, 3), 0u);
  EXPECT_TRUE(is_commutative(cfg));
  EXPECT_TRUE(oracle::tensor_consistent(cfg));
}

TEST(Closure, StronglyRegularGraphHasRankThree) {
  const auto cfg = coherent_closure(petersen());
  EXPECT_EQ(cfg.rank(), 3u);
  EXPECT_EQ(cfg.diagonal_colors(), (std::vector<std::uint32_t>{0}));
  EXPECT_TRUE(oracle::tensor_consistent(cfg));
}

TEST(Closure, PathSplitsCentreFromEnds) {
  Digraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(1, 2);
  g.add_arc(2, 1);
  const auto cfg = coherent_closure(g);
  EXPECT_FALSE(cfg.homogeneous());
  EXPECT_EQ(cfg.diagonal_colors().size(), 2u);
  EXPECT_TRUE(oracle::tensor_consistent(cfg));
}

TEST(Closure, RefinementIsStableAndMonotone) {
  const auto init = initial_partition(cycle(6));
  const auto once = wl_round(init);
  EXPECT_GE(once.rank, init.rank);
  const auto fixed = stable_partition(init);
  EXPECT_TRUE(fixed.stable);
  EXPECT_EQ(wl_round(fixed).rank, fixed.rank);
}

TEST(Closure, InvariantUnderRelabeling) {
  const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group("H1")));
  const auto g = realize(cfg, {1, 2, 4});
  const auto base = coherent_closure(g);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const Permutation sigma(oracle::random_perm(g.order(), rng));
    const auto other = coherent_closure(g.relabeled(sigma));
    EXPECT_EQ(other.rank(), base.rank());
    EXPECT_EQ(is_commutative(other), is_commutative(base));
    auto va = base.valencies(), vb = other.valencies();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    EXPECT_EQ(va, vb);
  }
}

TEST(Closure, ClosureOfSchemeRelationIsCoarserThanScheme) {
  // The closure of a union of classes is a fusion of the original scheme:
  // every class of the scheme lies inside one closure class.
  const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group("H4")));
  const auto g = realize(cfg, {1, 2});
  const auto cl = coherent_closure(g);
  EXPECT_LE(cl.rank(), cfg.rank());
  std::vector<std::int64_t> image(cfg.rank(), -1);
  for (Point x = 0; x < cfg.order(); ++x)
    for (Point y = 0; y < cfg.order(); ++y) {
      auto& slot = image[cfg.color(x, y)];
      if (slot < 0) slot = cl.color(x, y);
      EXPECT_EQ(slot, static_cast<std::int64_t>(cl.color(x, y)));
    }
}
