#include <gtest/gtest.h>

#include <filesystem>

#include "dsrg/error.hpp"
#include "dsrg/io.hpp"
#include "dsrg/params.hpp"
#include "dsrg/reproduce.hpp"

using namespace dsrg;

namespace {

const Check* find_check(const CaseReport& r, const std::string& needle) {
  for (const auto& c : r.checks)
    if (c.label.find(needle) != std::string::npos) return &c;
  return nullptr;
}

}  // namespace

TEST(Reproduce, CaseNames) {
  const auto& names = reproduce_case_names();
  EXPECT_EQ(names.front(), "prop32");
  EXPECT_EQ(names.back(), "table1");
  EXPECT_EQ(names.size(), 16u);
  EXPECT_THROW(reproduce_case("nope"), InputError);
}

TEST(Reproduce, MetacyclicCasePasses) {
  const auto r = reproduce_case("prop39");
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks)
    if (!c.informational) EXPECT_TRUE(c.ok) << c.label;
}

TEST(Reproduce, SmallAppendixCasesPass) {
  for (const char* name : {"h1", "h4", "h5"}) {
    const auto r = reproduce_case(name);
    EXPECT_TRUE(r.passed()) << format_report(r);
  }
}

TEST(Reproduce, CatalogueCaseSkipsWithoutData) {
  const auto r = reproduce_case("table1");
  EXPECT_TRUE(r.conditional);
  EXPECT_TRUE(r.skipped);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(format_report(r).find("[SKIP]"), std::string::npos);
}

TEST(Reproduce, EmitWritesVerifiableDigraphs) {
  const auto dir = std::filesystem::temp_directory_path() / "dsrg_emit_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ReproduceOptions opts;
  opts.emit_dir = dir.string();
  const auto r = reproduce_case("h1", opts);
  ASSERT_TRUE(r.passed());
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_TRUE(verify(parse_digraph(read_file(e.path().string())))) << e.path();
  }
  EXPECT_GE(files, 2u);
  std::filesystem::remove_all(dir);
}

TEST(Reproduce, ReportFormats) {
  const auto r = reproduce_case("prop39");
  const auto text = format_report(r);
  const auto tsv = format_report(r, true);
  EXPECT_EQ(text.rfind("[PASS] prop39: ", 0), 0u) << text;
  EXPECT_NE(tsv.find('\t'), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), std::count(tsv.begin(), tsv.end(), '\n'));
}

TEST(Reproduce, ParallelKeepsOrder) {
  ReproduceOptions opts;
  opts.jobs = 3;
  const auto reports = reproduce_cases({"h4", "prop39", "h1"}, opts);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].name, "h4");
  EXPECT_EQ(reports[1].name, "prop39");
  EXPECT_EQ(reports[2].name, "h1");
}

// The stated parameters of the eighth appendix group fail the counting
// identity, while the constructed digraph does satisfy it with t = 18.
TEST(Reproduce, EighthAppendixCaseRecordsTheMismatch) {
  const auto r = reproduce_case("h8");
  const Check* verify_check = find_check(r, "verify");
  ASSERT_NE(verify_check, nullptr) << format_report(r);
  EXPECT_FALSE(verify_check->ok);
  EXPECT_EQ(verify_check->actual, "72 26 18 8 10");
  EXPECT_FALSE(is_feasible({72, 26, 10, 8, 10}).ok);
  EXPECT_TRUE(is_feasible({72, 26, 18, 8, 10}).ok);
}
