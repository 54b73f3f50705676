#pragma once

// Coherent configurations (and association schemes, their homogeneous case)
// represented by a color matrix on Omega x Omega together with the tensor of
// intersection numbers p_{ij}^k.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/perm.hpp"

namespace dsrg {

// The tensor is stored densely, so the rank is capped.
inline constexpr std::size_t kMaxTensorRank = 320;

class CoherentConfig {
 public:
  // Validates axioms (i)-(iii) and computes the intersection numbers. Colors
  // must form the contiguous range 0..r-1. Throws AxiomError on the first
  // violation (with witness pairs) and InputError on malformed input.
  static CoherentConfig from_color_matrix(std::size_t n, std::vector<std::uint32_t> colors);

  std::size_t order() const { return n_; }
  std::size_t rank() const { return r_; }
  std::uint32_t color(Point x, Point y) const { return colors_[x * n_ + y]; }
  const std::vector<std::uint32_t>& colors() const { return colors_; }

  // p_{ij}^k: number of z with color(x,z) = i and color(z,y) = j for any
  // (x,y) of color k.
  std::int32_t p(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * r_ + j) * r_ + k]; }
  // The vector (p_{ij}^k) over all k.
  std::span<const std::int32_t> p_row(std::size_t i, std::size_t j) const {
    return {tensor_.data() + (i * r_ + j) * r_, r_};
  }

  // Out-valency of color i (number of y with color(x,y) = i, for x in its domain).
  std::int64_t valency(std::size_t i) const { return valencies_[i]; }
  const std::vector<std::int64_t>& valencies() const { return valencies_; }
  const std::vector<std::uint32_t>& diagonal_colors() const { return diagonal_; }
  bool is_diagonal(std::size_t i) const { return diagonal_flag_[i] != 0; }
  std::uint32_t transpose(std::size_t i) const { return transpose_[i]; }
  // A single diagonal color: the configuration is an association scheme.
  bool homogeneous() const { return diagonal_.size() == 1; }

  // The 0-1 adjacency of the union of the given colors (diagonal colors must
  // not be included).
  std::vector<std::uint8_t> relation_mask(std::span<const std::uint32_t> classes) const;

  friend bool operator==(const CoherentConfig& a, const CoherentConfig& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::uint32_t> colors_;
  std::vector<std::int32_t> tensor_;
  std::vector<std::int64_t> valencies_;
  std::vector<std::uint32_t> diagonal_;
  std::vector<std::uint8_t> diagonal_flag_;
  std::vector<std::uint32_t> transpose_;
};

bool is_commutative(const CoherentConfig& cfg);

struct ClassInfo {
  std::uint32_t color = 0;
  std::int64_t valency = 0;
  bool symmetric = false;
  std::uint32_t partner = 0;  // transpose color; equals `color` when symmetric
};

// Non-diagonal classes of a homogeneous configuration in ascending color order.
struct SchemeClassProfile {
  std::vector<ClassInfo> classes;

  std::size_t symmetric_count() const;
  std::size_t antisymmetric_pairs() const;
};

// Throws InputError unless the configuration is homogeneous.
SchemeClassProfile class_profile(const CoherentConfig& cfg);

// The configuration of 2-orbits of a permutation group.
CoherentConfig schurian(const PermGroup& group);

// Scheme file: first line "n r", then n lines of n color indices. Lines
// starting with '#' are ignored.
CoherentConfig parse_scheme(std::string_view text);
std::string export_scheme(const CoherentConfig& cfg);

}  // namespace dsrg
