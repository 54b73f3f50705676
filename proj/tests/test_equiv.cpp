#include <gtest/gtest.h>

#include <random>

#include "dsrg/cayley.hpp"
#include "dsrg/equiv.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/search.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

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

Digraph circulant(std::size_t n, std::vector<Point> conn) {
  Digraph g(n);
  for (Point x = 0; x < n; ++x)
    for (Point s : conn) g.add_arc(x, Point((x + s) % n));
  return g;
}

}  // namespace

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(17);
  const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group("H1")));
  const std::vector<Digraph> graphs = {petersen(), circulant(13, {1, 3, 9}), realize(cfg, {1, 2, 4})};
  for (const auto& g : graphs) {
    const auto base = canonical_form(g);
    for (int i = 0; i < 10; ++i) {
      const Permutation sigma(oracle::random_perm(g.order(), rng));
      const auto other = canonical_form(g.relabeled(sigma));
      EXPECT_EQ(other.graph, base.graph);
      EXPECT_EQ(other.aut_order(), base.aut_order());
    }
  }
}

TEST(Canonical, LabelingProducesTheCanonicalGraph) {
  const auto g = circulant(13, {1, 3, 9});
  const auto cf = canonical_form(g);
  ASSERT_EQ(cf.labeling.size(), 13u);
  for (Point i = 0; i < 13; ++i)
    for (Point j = 0; j < 13; ++j) EXPECT_EQ(cf.graph.has_arc(i, j), g.has_arc(cf.labeling[i], cf.labeling[j]));
}

TEST(Canonical, GeneratorsAreAutomorphismsAndOrderMatchesClosure) {
  const std::vector<std::pair<Digraph, std::uint64_t>> cases = {
      {petersen(), 120}, {circulant(7, {1}), 7}, {circulant(13, {1, 3, 9}), 39}, {circulant(8, {1, 2, 3, 4, 5, 6, 7}), 40320}};
  for (const auto& [g, order] : cases) {
    const auto cf = canonical_form(g);
    for (const auto& s : cf.generators) EXPECT_EQ(g.relabeled(s), g);
    EXPECT_EQ(cf.aut_order(), order);
    if (order <= 200000) EXPECT_EQ(group_order(PermGroup(g.order(), cf.generators)), order);
  }
}

TEST(Equivalence, TransposeAndComplementAreEquivalent) {
  const auto g = circulant(13, {1, 3, 9});
  EXPECT_EQ(equivalence_key(g), equivalence_key(g.transposed()));
  EXPECT_EQ(equivalence_key(g), equivalence_key(complement(g)));
  EXPECT_FALSE(are_isomorphic(g, complement(g)));
}

TEST(Equivalence, ClassesGroupIsomorphicInputs) {
  std::mt19937_64 rng(2);
  const auto a = circulant(13, {1, 3, 9});
  const auto b = circulant(13, {1, 5, 8, 12});
  const Permutation sigma(oracle::random_perm(13, rng));
  const auto classes = equivalence_classes({a, b, a.relabeled(sigma), complement(a)});
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].size() + classes[1].size(), 4u);
  for (const auto& cls : classes) {
    const bool has_a = std::find(cls.begin(), cls.end(), 0u) != cls.end();
    if (has_a) EXPECT_EQ(cls, (std::vector<std::size_t>{0, 2, 3}));
    else EXPECT_EQ(cls, (std::vector<std::size_t>{1}));
  }
}

TEST(Equivalence, WreathCayleyDigraphs) {
  // X3 and X4 have different automorphism group orders and are inequivalent.
  const auto g = wreath_s2_z4();
  std::vector<Digraph> graphs;
  for (const auto& d : fixtures::connection_sets())
    if (d.group == "wreath-s2-z4" && (d.name == "X3" || d.name == "X4"))
      graphs.push_back(cayley_digraph(g, connection_set(g, d.labels)));
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_NE(canonical_form(graphs[0]).aut_order(), canonical_form(graphs[1]).aut_order());
  EXPECT_EQ(equivalence_classes(graphs).size(), 2u);
}
