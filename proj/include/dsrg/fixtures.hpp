#pragma once

// Embedded construction data: the appendix permutation groups H1..H11 with
// their dart-seed unions, the connection sets over S_2 wr Z_4 and the
// metacyclic group of order 39, and the explicit designs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/cayley.hpp"
#include "dsrg/params.hpp"
#include "dsrg/perm.hpp"

namespace dsrg::fixtures {

struct GeneratorData {
  std::string name;
  std::size_t degree;
  std::vector<std::string> generators;  // 1-based cycle notation, one string per generator
};

// Digraph whose dart set is the union of the orbits of (1, j) for every j in `seeds`.
struct UnionData {
  std::string group;
  std::vector<Point> seeds;  // 1-based second coordinates of the seed pairs
  DsrgParams expected;
  std::string source;  // where the expectation comes from
};

struct ConnectionData {
  std::string group;  // "wreath-s2-z4" or "meta39"
  std::string name;   // "X1", ...
  std::vector<std::string> labels;
  DsrgParams expected;
};

const std::vector<GeneratorData>& appendix_groups();
const GeneratorData& appendix_group(const std::string& name);
PermGroup make_group(const GeneratorData& data);

const std::vector<UnionData>& appendix_unions();
const std::vector<ConnectionData>& connection_sets();

// The set X2 over S_2 wr Z_4 printed as {010,011,030,031,033,...} fails the
// group-ring test. Replacing the single element 031 by 002 is the only
// one-element change that yields (32,13,9,4,6); kept apart from the verbatim
// fixture data.
ConnectionData wreath_x2_candidate_erratum();

// (9,3,1)-design: blocks and the two automorphism generators of degree 9.
const std::vector<std::vector<Point>>& design_931_blocks();
const std::vector<std::string>& design_931_generators();
// Fano plane lines on points 1..7.
const std::vector<std::vector<Point>>& fano_lines();

// A row of the catalogue table: the union of relations `classes` (numbered as
// in the catalogue file) of scheme nr. `catalogue_nr` of the given order and
// rank is a DSRG with parameters `params`.
struct CatalogueRow {
  int row;
  DsrgParams params;
  std::vector<std::uint32_t> classes;
  std::size_t order;
  std::size_t rank;
  int catalogue_nr;
};

const std::vector<CatalogueRow>& catalogue_rows();

// FNV-1a checksum over a generator list; frozen in the tests to catch edits.
std::uint64_t checksum(const GeneratorData& data);
std::uint64_t checksum(const ConnectionData& data);

}  // namespace dsrg::fixtures
