#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls into the code under test except for plain data
// accessors (Digraph::has_arc, CoherentConfig::color, ...).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"
#include "dsrg/scheme.hpp"

namespace oracle {

using dsrg::DsrgParams;
using dsrg::Digraph;
using dsrg::Point;

// Dense integer matrix product A*A, then read off (k, t, lambda, mu) directly
// from the definition. nullopt if any entry disagrees.
inline std::optional<DsrgParams> dsrg_params(const Digraph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.has_arc(Point(i), Point(j)) ? 1 : 0;
  std::vector<std::vector<long>> sq(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m)
      if (a[i][m])
        for (std::size_t j = 0; j < n; ++j) sq[i][j] += a[m][j];
  long k = 0;
  for (std::size_t j = 0; j < n; ++j) k += a[0][j];
  std::optional<long> lam, mu;
  const long t = sq[0][0];
  for (std::size_t i = 0; i < n; ++i) {
    long row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += a[i][j];
      col += a[j][i];
    }
    if (row != k || col != k || sq[i][i] != t) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto& slot = a[i][j] ? lam : mu;
      if (!slot) slot = sq[i][j];
      if (*slot != sq[i][j]) return std::nullopt;
    }
  }
  // A complete or empty digraph leaves one of them unconstrained.
  return DsrgParams{long(n), k, t, lam.value_or(0), mu.value_or(0)};
}

// Feasibility re-derived from the spectrum: the eigenvalues other than k are
// roots of x^2 - (lambda - mu)x - (t - mu), which must be integers whenever
// their multiplicities differ, and multiplicities must be non-negative
// integers. Together with the counting identity and 0 <= t <= k.
inline bool spectrum_feasible(const DsrgParams& p) {
  const long n = p.n, k = p.k, t = p.t, l = p.lambda, m = p.mu;
  if (n < 2 || k < 1 || k >= n - 1 || t < 1 || t >= k) return false;
  if (l < 0 || m < 1 || l >= k || m > k) return false;
  if (k * (k + m - l) != t + (n - 1) * m) return false;
  const long disc = (m - l) * (m - l) + 4 * (t - m);
  if (disc <= 0) return false;
  const long d = std::lround(std::sqrt(double(disc)));
  if (d * d != disc) return false;
  // rho, sigma = ((l - m) +- d) / 2; multiplicities solve
  // 1 + f + g = n and k + f rho + g sigma = 0 (trace of A).
  const long num = 2 * k + (l - m) * (n - 1);
  if (num % d != 0) return false;
  const long diff = num / d;  // g - f
  if ((n - 1 - diff) % 2 != 0) return false;
  const long f = (n - 1 - diff) / 2, g = (n - 1 + diff) / 2;
  if (f < 0 || g < 0) return false;
  // Eigenvalues must be integers when d is an integer and parity works.
  if (((l - m) + d) % 2 != 0) return false;
  return true;
}

// p_{ij}^k counted directly on the color matrix over every pair of color k.
inline bool tensor_consistent(const dsrg::CoherentConfig& c) {
  const std::size_t n = c.order(), r = c.rank();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::int32_t> count(r * r, 0);
      for (std::size_t z = 0; z < n; ++z) ++count[c.color(Point(x), Point(z)) * r + c.color(Point(z), Point(y))];
      const std::size_t k = c.color(Point(x), Point(y));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (count[i * r + j] != c.p(i, j, k)) return false;
    }
  return true;
}

// All orbit elements of a permutation group by closure over images.
inline std::set<std::vector<Point>> all_elements(std::size_t degree, const std::vector<std::vector<Point>>& gens) {
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = Point(i);
  std::set<std::vector<Point>> seen{id};
  std::vector<std::vector<Point>> todo{id};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<Point> next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = g[cur[i]];
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

inline std::vector<Point> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = Point(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
