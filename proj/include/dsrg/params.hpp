#pragma once

// DSRG parameter arithmetic, feasibility conditions and adjacency-level
// verification of A^2 = tI + lambda A + mu (J - I - A).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/digraph.hpp"

namespace dsrg {

struct DsrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  // 0 < t < k. t == k is an SRG, t == 0 a doubly regular tournament.
  bool genuine() const { return 0 < t && t < k; }
  std::string to_string() const;  // "n k t lambda mu"

  friend bool operator==(const DsrgParams&, const DsrgParams&) = default;
  friend auto operator<=>(const DsrgParams&, const DsrgParams&) = default;
};

struct Feasibility {
  bool ok = false;
  std::int64_t d = 0;  // positive root of d^2 = (mu-lambda)^2 + 4(t-mu), when it exists
  std::string reason;  // first failed condition, empty when ok
};

Feasibility is_feasible(const DsrgParams& p);

// All feasible parameter sets of order n, sorted lexicographically.
// `genuine_only` keeps 0 < t < k, `half_only` keeps 2k < n.
std::vector<DsrgParams> enumerate_feasible(std::int64_t n, bool genuine_only = true, bool half_only = false);

// Parameters of J - I - A given the parameters of A.
DsrgParams complement_params(const DsrgParams& p);

// Outcome of checking a candidate. `params` is set on success (including the
// non-genuine t == 0 and t == k cases); otherwise `reason` names the first
// violated condition with witness vertices (1-based).
struct Verdict {
  std::optional<DsrgParams> params;
  std::string reason;

  explicit operator bool() const { return params.has_value(); }
};

Verdict verify(const Digraph& g);

Digraph complement(const Digraph& g);
Digraph reverse(const Digraph& g);

// Entry (x,y) of A^2, i.e. the number of directed 2-paths x -> z -> y.
std::vector<std::uint32_t> square_counts(const Digraph& g);

}  // namespace dsrg
