#include <gtest/gtest.h>

#include "dsrg/designs.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/search.hpp"

using namespace dsrg;

namespace {

BlockDesign fano() { return validate_design(7, fixtures::fano_lines()); }

}  // namespace

TEST(Designs, FanoParameters) {
  const auto d = fano();
  EXPECT_EQ(d.b, 7u);
  EXPECT_EQ(d.k, 3u);
  EXPECT_EQ(d.r, 3u);
  EXPECT_EQ(d.lambda, 1u);
  for (const auto& blk : d.blocks) EXPECT_TRUE(std::is_sorted(blk.begin(), blk.end()));
}

TEST(Designs, ValidationErrors) {
  EXPECT_THROW(validate_design(4, {{1, 2}, {3, 5}}), InputError);
  EXPECT_THROW(validate_design(4, {{1, 1}}), InputError);
  EXPECT_THROW(validate_design(4, {{1, 2}, {1, 2, 3}}), InputError);
  // Pair {1,2} twice, {3,4} never: lambda not constant.
  EXPECT_THROW(validate_design(4, {{1, 2}, {1, 2}, {3, 4}}), AxiomError);
  // r not constant.
  EXPECT_THROW(validate_design(3, {{1, 2}, {1, 3}}), AxiomError);
}

TEST(Designs, LeviGraphIsBipartiteIncidence) {
  const auto d = fano();
  const auto levi = levi_graph(d);
  EXPECT_EQ(levi.points, 7u);
  EXPECT_EQ(levi.blocks, 7u);
  EXPECT_EQ(levi.graph.order(), 14u);
  EXPECT_EQ(levi.graph, levi.graph.transposed());
  for (Point x = 0; x < 14; ++x) EXPECT_EQ(levi.graph.out_degree(x), 3u);
  for (Point p = 0; p < 7; ++p)
    for (Point q = 0; q < 7; ++q) EXPECT_FALSE(levi.graph.has_arc(p, q));
  EXPECT_TRUE(levi.is_point(6));
  EXPECT_FALSE(levi.is_point(7));
}

TEST(Designs, FanoAutomorphismsFixTheBipartition) {
  const auto d = fano();
  const auto g = levi_automorphism_group(d);
  EXPECT_EQ(group_order(g), 168u * 2);  // collineations and correlations
}

TEST(Designs, ExtendingAPointGroup) {
  const auto d = fano();
  const PermGroup cyc(7, {Permutation::from_cycles("(1,2,3,4,5,6,7)", 7)});
  // Only meaningful when the cycle maps lines to lines.
  try {
    const auto ext = extend_to_levi(d, cyc);
    EXPECT_EQ(ext.degree(), 14u);
    EXPECT_EQ(group_order(ext), 7u);
    const auto levi = levi_graph(d);
    for (const auto& s : ext.generators()) EXPECT_EQ(levi.graph.relabeled(s), levi.graph);
  } catch (const InputError&) {
    SUCCEED() << "fixture lines are not cyclic under (1..7)";
  }
  const PermGroup bad(7, {Permutation::from_cycles("(1,2)", 7)});
  EXPECT_THROW(extend_to_levi(d, bad), InputError);
}

TEST(Designs, PipelineOnFanoFlags) {
  const auto d = fano();
  const auto g = levi_automorphism_group(d);
  // A point together with a line through it.
  const auto line = d.blocks.front();
  const Object flag = {line[0], Point(7)};
  const auto res = design_action_pipeline(g, flag, ObjectKind::Set);
  EXPECT_EQ(res.action.domain.size(), 21u);
  EXPECT_TRUE(res.scheme.homogeneous());
  EXPECT_EQ(res.scheme.order(), 21u);
}

TEST(Designs, PipelineCaps) {
  const auto d = fano();
  const auto g = levi_automorphism_group(d);
  PipelineCaps caps;
  caps.max_orbit = 10;
  EXPECT_THROW(design_action_pipeline(g, {0, 7}, ObjectKind::Set, caps), LimitError);
}
