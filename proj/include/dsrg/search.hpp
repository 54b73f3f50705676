#pragma once

// Search for DSRGs among unions of classes of a homogeneous coherent
// configuration. Candidates are pre-filtered by the valency knapsack
// (t, k - t) and tested on the tensor of intersection numbers: for a class set
// S the number of 2-paths between the ends of any pair of color c is
//   c_c = sum_{i,j in S} p_{ij}^c,
// so the union is a DSRG iff c_c is one constant lambda on S and one constant
// mu on the remaining non-diagonal classes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"
#include "dsrg/scheme.hpp"

namespace dsrg {

using ClassSet = std::vector<std::uint32_t>;  // sorted non-diagonal colors

struct UnionCandidate {
  ClassSet classes;
  std::int64_t k = 0;  // sum of valencies
  std::int64_t t = 0;  // valencies of classes whose transpose is also selected
};

// Throws InputError for an empty set, a diagonal or out-of-range class.
UnionCandidate make_candidate(const CoherentConfig& cfg, ClassSet classes);

struct SearchHit {
  UnionCandidate candidate;
  DsrgParams params;
};

// All non-empty class sets S with undirected valency t and directed valency
// k - t. An antisymmetric class counts towards t iff its partner is in S.
std::vector<ClassSet> knapsack_filter(const SchemeClassProfile& profile, std::int64_t t, std::int64_t k_minus_t);

// The tensor test; `reason` names the first non-constant entry on rejection.
Verdict tensor_check(const CoherentConfig& cfg, const UnionCandidate& candidate);

// The union as a digraph on the points of the configuration.
Digraph realize(const CoherentConfig& cfg, const ClassSet& classes);

// Images of S under transposition and under complementation within the
// non-diagonal classes.
ClassSet transpose_image(const CoherentConfig& cfg, const ClassSet& classes);
ClassSet complement_classes(const CoherentConfig& cfg, const ClassSet& classes);

struct SearchOptions {
  // Explicit parameter sets to look for. Empty: every feasible set of order n,
  // restricted to 2k < n when deduplicating (complements are equivalent).
  std::vector<DsrgParams> targets;
  std::size_t max_rank = 25;
  // Report every union instead of one representative per
  // {S, S^T, complement(S), complement(S)^T} class.
  bool all_unions = false;
  std::size_t jobs = 1;
};

// Exhaustive branch-and-bound over class subsets. Hits are sorted by class
// set and identical for any number of jobs. Throws InputError if the
// configuration is not homogeneous and LimitError above `max_rank`.
std::vector<SearchHit> search_scheme(const CoherentConfig& cfg, const SearchOptions& options = {});

// "n k t l m | i1 i2 ... | t+(k-t)"
std::string format_hit(const SearchHit& hit);

}  // namespace dsrg
