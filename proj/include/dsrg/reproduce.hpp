#pragma once

// Reproduction cases built from the embedded construction data. Each case
// rebuilds its digraphs and compares verify / feasibility / closure /
// equivalence results against the stated expectations.

#include <cstddef>
#include <string>
#include <vector>

namespace dsrg {

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
  // Reported but never counted as a failure.
  bool informational = false;
};

struct CaseReport {
  std::string name;
  bool conditional = false;  // needs user-supplied data
  bool skipped = false;      // conditional data was not supplied
  std::string note;          // reason for skipping
  std::vector<Check> checks;

  bool passed() const;
};

struct ReproduceOptions {
  // Directory of converted catalogue scheme files named as<order>_<nr>.txt.
  std::string catalogue_dir;
  // When set, every constructed digraph is written here as <case>_<index>.txt.
  std::string emit_dir;
  std::size_t jobs = 1;
};

// prop32, prop39, h1..h11, ex931, fano, table1 (conditional).
const std::vector<std::string>& reproduce_case_names();

// Throws InputError for an unknown case name.
CaseReport reproduce_case(const std::string& name, const ReproduceOptions& options = {});

// Runs several cases, in parallel when options.jobs > 1; reports keep the
// order of `names`.
std::vector<CaseReport> reproduce_cases(const std::vector<std::string>& names, const ReproduceOptions& options = {});

// One line per check: "[PASS] case: label: expected X, got Y" or tab-separated
// "case status label expected actual".
std::string format_report(const CaseReport& report, bool tsv = false);

}  // namespace dsrg
