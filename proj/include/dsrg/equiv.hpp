#pragma once

// Canonical labeling, isomorphism and automorphism groups of digraphs by
// individualization-refinement, and the DSRG equivalence
//   G1 ~ G2  iff  G1 is isomorphic to G2, G2^T, complement(G2) or complement(G2)^T.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/perm.hpp"

namespace dsrg {

inline constexpr std::size_t kDefaultCanonicalCap = 128;

struct CanonicalForm {
  // Relabeled copy of the input; equal for isomorphic inputs.
  Digraph graph;
  // labeling[i] is the input vertex placed at position i.
  std::vector<Point> labeling;
  // Generators of Aut(g), as permutations of the input vertices.
  std::vector<Permutation> generators;
  // Orbit lengths along the base; their product is |Aut(g)|.
  std::vector<std::size_t> base_orbits;

  // |Aut(g)|, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> aut_order() const;
};

// Throws LimitError if the order exceeds `cap`.
CanonicalForm canonical_form(const Digraph& g, std::size_t cap = kDefaultCanonicalCap);

bool are_isomorphic(const Digraph& a, const Digraph& b, std::size_t cap = kDefaultCanonicalCap);

// The least canonical graph among g, g^T, complement(g), complement(g)^T.
Digraph equivalence_key(const Digraph& g, std::size_t cap = kDefaultCanonicalCap);

// Partition of the indices of `graphs` into equivalence classes. Classes are
// ordered by their least key; each class lists its members in input order.
// Graphs of different orders are never equivalent.
std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<Digraph>& graphs,
                                                          std::size_t cap = kDefaultCanonicalCap);

}  // namespace dsrg
