#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dsrg/perm.hpp"

namespace dsrg {

// Loop-free binary relation on {0..n-1}, stored as a dense bit matrix with
// one 64-bit-word-aligned row per vertex.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t order);
  static Digraph from_arcs(std::size_t order, std::span<const std::pair<Point, Point>> arcs);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool has_arc(Point u, Point v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u; }
  // Throws InputError on a loop or an out-of-range vertex.
  void add_arc(Point u, Point v);
  void remove_arc(Point u, Point v);

  std::span<const std::uint64_t> row(Point u) const { return {bits_.data() + u * words_, words_}; }

  std::size_t out_degree(Point u) const;
  std::size_t arc_count() const;
  std::vector<std::pair<Point, Point>> arcs() const;

  Digraph transposed() const;
  // Vertex v of the result corresponds to vertex sigma^-1(v) of this graph,
  // i.e. arc (u,v) becomes (sigma(u), sigma(v)).
  Digraph relabeled(const Permutation& sigma) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dsrg
