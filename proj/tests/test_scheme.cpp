#include <gtest/gtest.h>

#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/perm.hpp"
#include "dsrg/scheme.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

std::vector<std::uint32_t> path_colors() {
  // Path 1-2-3: identity, edges, non-edges. Not coherent: vertex 2 has two
  // neighbours, the ends one.
  return {0, 1, 2, 1, 0, 1, 2, 1, 0};
}

}  // namespace

TEST(Scheme, IntersectionNumbersMatchDirectCount) {
  for (const char* name : {"H1", "H4", "H5"}) {
    const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group(name)));
    EXPECT_TRUE(cfg.homogeneous()) << name;
    EXPECT_TRUE(oracle::tensor_consistent(cfg)) << name;
  }
}

TEST(Scheme, ValenciesAndTransposes) {
  const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group("H1")));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cfg.rank(); ++i) {
    total += cfg.valency(i);
    EXPECT_EQ(cfg.transpose(cfg.transpose(i)), i);
    EXPECT_EQ(cfg.valency(cfg.transpose(i)), cfg.valency(i));
    // p_{i i'}^0 = valency
    EXPECT_EQ(cfg.p(i, cfg.transpose(i), 0), cfg.valency(i));
  }
  EXPECT_EQ(total, static_cast<std::int64_t>(cfg.order()));
  const auto prof = class_profile(cfg);
  EXPECT_EQ(prof.classes.size(), cfg.rank() - 1);
  EXPECT_EQ(prof.symmetric_count() + 2 * prof.antisymmetric_pairs(), cfg.rank() - 1);
}

TEST(Scheme, CyclicGroupGivesCommutativeScheme) {
  const auto cfg = schurian(PermGroup::cyclic(7));
  EXPECT_EQ(cfg.rank(), 7u);
  EXPECT_TRUE(is_commutative(cfg));
  for (std::size_t i = 1; i < 7; ++i) EXPECT_EQ(cfg.valency(i), 1);
}

TEST(Scheme, NonAbelianRegularActionIsNotCommutative) {
  const PermGroup s3(6, {Permutation::from_cycles("(1,2,3)(4,5,6)", 6), Permutation::from_cycles("(1,4)(2,6)(3,5)", 6)});
  const auto cfg = schurian(s3);
  EXPECT_EQ(cfg.rank(), 6u);
  EXPECT_FALSE(is_commutative(cfg));
}

TEST(Scheme, IntransitiveGroupHasSeveralFibres) {
  const PermGroup g(5, {Permutation::from_cycles("(1,2)", 5), Permutation::from_cycles("(3,4,5)", 5)});
  const auto cfg = schurian(g);
  EXPECT_FALSE(cfg.homogeneous());
  EXPECT_EQ(cfg.diagonal_colors().size(), 2u);
  EXPECT_TRUE(oracle::tensor_consistent(cfg));
  EXPECT_THROW(class_profile(cfg), InputError);
}

TEST(Scheme, RejectsNonCoherentPartition) {
  EXPECT_THROW(CoherentConfig::from_color_matrix(3, path_colors()), AxiomError);
  // Diagonal mixing with off-diagonal entries.
  EXPECT_THROW(CoherentConfig::from_color_matrix(2, {0, 0, 0, 0}), AxiomError);
  // Colors must be contiguous.
  EXPECT_THROW(CoherentConfig::from_color_matrix(2, {0, 5, 5, 0}), Error);
  EXPECT_THROW(CoherentConfig::from_color_matrix(2, {0, 1, 1}), InputError);
}

TEST(Scheme, TextRoundTrip) {
  const auto cfg = schurian(fixtures::make_group(fixtures::appendix_group("H1")));
  const auto text = export_scheme(cfg);
  const auto back = parse_scheme(text);
  EXPECT_EQ(back, cfg);
  EXPECT_EQ(back.rank(), cfg.rank());
  EXPECT_THROW(parse_scheme("2 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_scheme("2 2\n0 x\n1 0\n"), InputError);
}

TEST(Scheme, RelationMaskMatchesColors) {
  const auto cfg = schurian(PermGroup::cyclic(5));
  const std::vector<std::uint32_t> cls = {1, 4};
  const auto mask = cfg.relation_mask(cls);
  for (Point x = 0; x < 5; ++x)
    for (Point y = 0; y < 5; ++y) {
      const auto c = cfg.color(x, y);
      EXPECT_EQ(mask[x * 5 + y] != 0, c == 1 || c == 4);
    }
}
