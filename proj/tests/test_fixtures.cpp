#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dsrg/fixtures.hpp"
#include "dsrg/params.hpp"

using namespace dsrg;

// Frozen checksums of the transcribed generator lists and connection sets. A
// change here means the embedded data was edited.
TEST(Fixtures, GeneratorChecksums) {
  const std::map<std::string, std::uint64_t> frozen = {
      {"H1", 12594326560756955068ull},  {"H2", 54119233751516843ull},    {"H3", 12260090818599630420ull},
      {"H4", 1511725391831369128ull},   {"H5", 9054318075545355563ull},  {"H6", 4322054307696005009ull},
      {"H7", 1710880138033510396ull},   {"H8", 4273527729251061114ull},  {"H9", 16260210087172011463ull},
      {"H10", 16514530380567306504ull}, {"H11", 892636134283167498ull},
  };
  ASSERT_EQ(fixtures::appendix_groups().size(), frozen.size());
  for (const auto& g : fixtures::appendix_groups()) EXPECT_EQ(fixtures::checksum(g), frozen.at(g.name)) << g.name;
}

TEST(Fixtures, ConnectionSetChecksums) {
  const std::map<std::string, std::uint64_t> frozen = {
      {"wreath-s2-z4/X1", 7500746244553906813ull},  {"wreath-s2-z4/X2", 15329708358530706268ull},
      {"wreath-s2-z4/X3", 13377497910558956011ull}, {"wreath-s2-z4/X4", 13182400708173041668ull},
      {"wreath-s2-z4/X5", 2864442724185534036ull},  {"wreath-s2-z4/X6", 8286488605854698295ull},
      {"meta39/X1", 12633124534447229020ull},       {"meta39/X2", 7143227453111540350ull},
      {"meta39/X3", 14959362931693924220ull},       {"meta39/X4", 5974767726571709481ull},
      {"meta39/X5", 6318619558621491869ull},        {"meta39/X6", 4960387475054467368ull},
      {"meta39/X7", 4538655335475859150ull},        {"meta39/X8", 3143641436722038836ull},
  };
  ASSERT_EQ(fixtures::connection_sets().size(), frozen.size());
  for (const auto& c : fixtures::connection_sets())
    EXPECT_EQ(fixtures::checksum(c), frozen.at(c.group + "/" + c.name)) << c.name;
}

TEST(Fixtures, GroupsAreWellFormed) {
  for (const auto& g : fixtures::appendix_groups()) {
    const auto group = fixtures::make_group(g);
    EXPECT_EQ(group.degree(), g.degree);
    EXPECT_EQ(group.generators().size(), g.generators.size());
  }
}

TEST(Fixtures, UnionsReferToKnownGroups) {
  std::set<std::string> names;
  for (const auto& g : fixtures::appendix_groups()) names.insert(g.name);
  EXPECT_EQ(fixtures::appendix_unions().size(), 18u);
  for (const auto& u : fixtures::appendix_unions()) {
    EXPECT_TRUE(names.count(u.group)) << u.group;
    EXPECT_FALSE(u.seeds.empty());
    EXPECT_EQ(static_cast<std::size_t>(u.expected.n), fixtures::appendix_group(u.group).degree);
  }
}

TEST(Fixtures, ConnectionSetSizesMatchValency) {
  for (const auto& c : fixtures::connection_sets())
    EXPECT_EQ(static_cast<std::int64_t>(c.labels.size()), c.expected.k) << c.group << " " << c.name;
}

TEST(Fixtures, CatalogueRowsAreFeasibleAndDistinct) {
  const auto& rows = fixtures::catalogue_rows();
  EXPECT_EQ(rows.size(), 28u);
  std::set<int> seen;
  for (const auto& r : rows) {
    EXPECT_TRUE(seen.insert(r.row).second);
    EXPECT_TRUE(is_feasible(r.params).ok) << r.params.to_string();
    EXPECT_EQ(static_cast<std::size_t>(r.params.n), r.order);
    EXPECT_FALSE(r.classes.empty());
    for (auto c : r.classes) EXPECT_LT(c, r.rank);
  }
}

TEST(Fixtures, DesignData) {
  EXPECT_EQ(fixtures::design_931_blocks().size(), 12u);
  for (const auto& b : fixtures::design_931_blocks()) EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(fixtures::fano_lines().size(), 7u);
  EXPECT_FALSE(fixtures::design_931_generators().empty());
}
