#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/search.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

CoherentConfig scheme(const std::string& name) {
  return schurian(fixtures::make_group(fixtures::appendix_group(name)));
}

CoherentConfig s3_regular() {
  return schurian(PermGroup(6, {Permutation::from_cycles("(1,2,3)(4,5,6)", 6),
                                Permutation::from_cycles("(1,4)(2,6)(3,5)", 6)}));
}

ClassSet random_union(const CoherentConfig& cfg, std::mt19937_64& rng) {
  ClassSet s;
  for (std::uint32_t c = 0; c < cfg.rank(); ++c)
    if (!cfg.is_diagonal(c) && rng() % 3 == 0) s.push_back(c);
  if (s.empty()) s.push_back(cfg.rank() - 1);
  return s;
}

}  // namespace

TEST(Search, CandidateBookkeeping) {
  const auto cfg = s3_regular();
  for (std::uint32_t a = 1; a < 6; ++a) {
    const auto c = make_candidate(cfg, {a});
    EXPECT_EQ(c.k, 1);
    EXPECT_EQ(c.t, cfg.transpose(a) == a ? 1 : 0);
  }
  EXPECT_THROW(make_candidate(cfg, {0}), InputError);
}

TEST(Search, TensorCheckAgreesWithAdjacencyOracle) {
  std::mt19937_64 rng(5);
  for (const char* name : {"H1", "H4", "H5"}) {
    const auto cfg = scheme(name);
    int hits = 0;
    for (int i = 0; i < 120; ++i) {
      const auto s = random_union(cfg, rng);
      const auto fast = tensor_check(cfg, make_candidate(cfg, s));
      const auto slow = oracle::dsrg_params(realize(cfg, s));
      ASSERT_EQ(fast.params.has_value(), slow.has_value()) << name;
      if (fast) {
        ++hits;
        EXPECT_EQ(*fast.params, *slow);
      }
    }
    (void)hits;
  }
}

TEST(Search, SmallestDsrgFromRegularS3) {
  const auto hits = search_scheme(s3_regular());
  ASSERT_FALSE(hits.empty());
  bool found = false;
  for (const auto& h : hits) {
    EXPECT_EQ(oracle::dsrg_params(realize(s3_regular(), h.candidate.classes)), h.params);
    EXPECT_TRUE(h.params.genuine());
    EXPECT_LT(2 * h.params.k, h.params.n);
    found = found || h.params == DsrgParams{6, 2, 1, 0, 1};
  }
  EXPECT_TRUE(found);
}

TEST(Search, ExhaustiveAgainstBruteForce) {
  // Every union of classes checked one by one with the dense oracle.
  const auto cfg = scheme("H1");
  SearchOptions opts;
  opts.all_unions = true;
  const auto hits = search_scheme(cfg, opts);
  std::set<ClassSet> got;
  for (const auto& h : hits) got.insert(h.candidate.classes);

  std::vector<std::uint32_t> nondiag;
  for (std::uint32_t c = 0; c < cfg.rank(); ++c)
    if (!cfg.is_diagonal(c)) nondiag.push_back(c);
  ASSERT_LE(nondiag.size(), 20u);
  std::set<ClassSet> expect;
  for (std::uint64_t mask = 1; mask < (1ull << nondiag.size()); ++mask) {
    ClassSet s;
    for (std::size_t b = 0; b < nondiag.size(); ++b)
      if (mask >> b & 1) s.push_back(nondiag[b]);
    const auto cand = make_candidate(cfg, s);
    if (!(0 < cand.t && cand.t < cand.k)) continue;
    const auto v = tensor_check(cfg, cand);
    if (v && is_feasible(*v.params).ok) expect.insert(s);
  }
  EXPECT_EQ(got, expect);
}

TEST(Search, DeduplicatedHitsAreDistinctRepresentatives) {
  const auto cfg = scheme("H1");
  const auto hits = search_scheme(cfg);
  std::set<ClassSet> keys;
  for (const auto& h : hits) {
    const auto s = h.candidate.classes;
    const auto c = complement_classes(cfg, s);
    const ClassSet key = std::min({s, transpose_image(cfg, s), c, transpose_image(cfg, c)});
    EXPECT_TRUE(keys.insert(key).second);
  }
  EXPECT_FALSE(hits.empty());
}

TEST(Search, TargetsRestrictOutput) {
  const auto cfg = scheme("H1");
  SearchOptions opts;
  opts.targets = {{48, 10, 6, 2, 2}};
  const auto hits = search_scheme(cfg, opts);
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) EXPECT_EQ(h.params, (DsrgParams{48, 10, 6, 2, 2}));
}

TEST(Search, ParallelMatchesSerial) {
  const auto cfg = scheme("H5");
  SearchOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = search_scheme(cfg, serial);
  const auto b = search_scheme(cfg, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].candidate.classes, b[i].candidate.classes);
}

TEST(Search, RankCapThrows) {
  const auto cfg = scheme("H1");
  SearchOptions opts;
  opts.max_rank = 3;
  EXPECT_THROW(search_scheme(cfg, opts), LimitError);
}

TEST(Search, KnapsackFilterSplitsValency) {
  const auto cfg = scheme("H1");
  const auto prof = class_profile(cfg);
  const auto sets = knapsack_filter(prof, 6, 4);
  ASSERT_FALSE(sets.empty());
  for (const auto& s : sets) {
    const auto c = make_candidate(cfg, s);
    EXPECT_EQ(c.t, 6);
    EXPECT_EQ(c.k, 10);
  }
}

TEST(Search, ComplementAndTransposeImages) {
  const auto cfg = scheme("H1");
  const ClassSet s = {1, 2, 4};
  const auto c = complement_classes(cfg, s);
  EXPECT_EQ(complement_classes(cfg, c), s);
  EXPECT_EQ(transpose_image(cfg, transpose_image(cfg, s)), s);
  EXPECT_EQ(realize(cfg, transpose_image(cfg, s)), realize(cfg, s).transposed());
}

TEST(Search, FormatHit) {
  const auto hits = search_scheme(s3_regular());
  ASSERT_FALSE(hits.empty());
  const auto line = format_hit(hits.front());
  EXPECT_EQ(line.rfind(hits.front().params.to_string(), 0), 0u);
}
