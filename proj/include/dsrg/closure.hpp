#pragma once

// Coherent closure via two-dimensional Weisfeiler-Leman refinement.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/scheme.hpp"

namespace dsrg {

struct ColorPartition {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> colors;  // row-major n x n, contiguous from 0
  bool stable = false;

  std::uint32_t color(std::size_t x, std::size_t y) const { return colors[x * n + y]; }
};

// A 0-1 matrix, row-major n x n.
using BinaryMatrix = std::vector<std::uint8_t>;

// Product coloring of the diagonal/off-diagonal split and every matrix support.
// Colors are numbered in lexicographic order of (off-diagonal, bits...), so
// diagonal colors come first.
ColorPartition initial_partition(std::size_t n, std::span<const BinaryMatrix> matrices);
ColorPartition initial_partition(const Digraph& g);

// One refinement step:
//   new(x,y) = (old(x,y), old(y,x), multiset over z of (old(x,z), old(z,y))).
// New colors are numbered by sorting the distinct signatures, so the result
// only depends on the input up to relabeling of Omega.
ColorPartition wl_round(const ColorPartition& partition);

// Iterates wl_round to its fixed point.
ColorPartition stable_partition(ColorPartition partition);

CoherentConfig coherent_closure(std::size_t n, std::span<const BinaryMatrix> matrices);
CoherentConfig coherent_closure(const Digraph& g);

}  // namespace dsrg
