#pragma once

// Permutations, finitely generated permutation groups, orbits on points,
// k-subsets and k-tuples, induced actions and 2-orbit decompositions.
//
// Points are 0-based inside the library. Text formats (cycle notation, group
// files) are 1-based and converted at the boundary.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsrg {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  // `images[p]` is the image of point p. Throws InputError unless a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Parses GAP-style cycle notation such as "(1,2,4)(3,11)". Points are
  // 1-based; points not mentioned are fixed. "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  // Right action, GAP convention: x^(g*h) = (x^g)^h.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  // 1-based cycle notation, fixed points omitted.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

class PermGroup {
 public:
  // An empty generator list denotes the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);
  // Generated by (1,2) and (1,2,...,n).
  static PermGroup symmetric(std::size_t degree);
  // Generated by the n-cycle (1,2,...,n).
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

// How a point sequence is acted upon: sets are kept sorted ascending, tuples
// keep their order. A single point is a 1-tuple.
enum class ObjectKind { Set, Tuple };
using Object = std::vector<Point>;

Object canonical_object(Object obj, ObjectKind kind);
Object act(const Permutation& g, const Object& obj, ObjectKind kind);

// Closure of {seed} under the generators, breadth-first with generators taken
// in order. The first element is the canonicalized seed.
std::vector<Object> orbit(const PermGroup& group, const Object& seed, ObjectKind kind);
std::vector<Point> point_orbit(const PermGroup& group, Point seed);

// The action of a group restricted to one orbit of objects.
struct InducedAction {
  ObjectKind kind;
  std::vector<Object> domain;
  // Degree |domain|; generator i is the image of base generator i.
  PermGroup action;

  // Index of `obj` in the domain, or -1.
  std::ptrdiff_t index_of(const Object& obj) const;
};

InducedAction induced_action(const PermGroup& group, const Object& seed, ObjectKind kind);
// Maps an arbitrary permutation of the base points to the domain.
Permutation induce(const InducedAction& action, const Permutation& g);

// Partition of Omega x Omega into 2-orbits, stored as a color matrix.
// Diagonal orbits come first; within each group, orbits are numbered by their
// lexicographically least pair.
struct TwoOrbits {
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> colors;  // row-major degree x degree

  std::uint32_t color(Point x, Point y) const { return colors[x * degree + y]; }
  std::vector<std::pair<Point, Point>> relation(std::uint32_t c) const;
};

TwoOrbits two_orbits(const PermGroup& group);

// The orbit of the pair (x, y) under the group, as a set of pairs.
std::vector<std::pair<Point, Point>> orbital(const PermGroup& group, Point x, Point y);

inline constexpr std::uint64_t kDefaultOrderCap = 10'000'000;

// Exact order by breadth-first enumeration of all elements. Throws LimitError
// once more than `cap` elements have been found.
std::uint64_t group_order(const PermGroup& group, std::uint64_t cap = kDefaultOrderCap);

}  // namespace dsrg
