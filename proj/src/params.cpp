#include "dsrg/params.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "dsrg/error.hpp"

namespace dsrg {

std::string DsrgParams::to_string() const {
  return std::to_string(n) + " " + std::to_string(k) + " " + std::to_string(t) + " " + std::to_string(lambda) +
         " " + std::to_string(mu);
}

namespace {

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

Feasibility fail(std::string reason) { return Feasibility{false, 0, std::move(reason)}; }

}  // namespace

Feasibility is_feasible(const DsrgParams& p) {
  const auto [n, k, t, l, m] = p;
  if (n < 1 || k < 0 || t < 0 || l < 0 || m < 0) return fail("n >= 1 and k, t, lambda, mu >= 0");
  if (k >= n) return fail("k < n");
  if (!(0 <= l && l < t)) return fail("0 <= lambda < t");
  if (!(t < k)) return fail("t < k");
  if (!(0 < m && m <= t)) return fail("0 < mu <= t");
  if (!(-2 * (k - t - 1) <= m - l && m - l <= 2 * (k - t))) return fail("-2(k-t-1) <= mu-lambda <= 2(k-t)");
  if (k * (k + m - l) != t + (n - 1) * m) return fail("k(k+mu-lambda) = t+(n-1)mu");
  const std::int64_t disc = (m - l) * (m - l) + 4 * (t - m);
  const std::int64_t d = disc > 0 ? isqrt(disc) : 0;
  if (d <= 0 || d * d != disc) return fail("d^2 = (mu-lambda)^2+4(t-mu) has no positive integer root");
  const std::int64_t num = 2 * k - (m - l) * (n - 1);
  if (num % d != 0) return fail("d divides 2k-(mu-lambda)(n-1)");
  const std::int64_t q = num / d;
  if (((n - 1 - q) % 2 + 2) % 2 != 0) return fail("n-1 = (2k-(mu-lambda)(n-1))/d mod 2");
  if (n - 1 < std::llabs(q)) return fail("n-1 >= |(2k-(mu-lambda)(n-1))/d|");
  return Feasibility{true, d, {}};
}

std::vector<DsrgParams> enumerate_feasible(std::int64_t n, bool genuine_only, bool half_only) {
  std::vector<DsrgParams> out;
  for (std::int64_t k = 1; k < n; ++k) {
    if (half_only && 2 * k >= n) break;
    for (std::int64_t t = 0; t <= k; ++t) {
      for (std::int64_t l = 0; l <= t; ++l) {
        for (std::int64_t m = 0; m <= t; ++m) {
          DsrgParams p{n, k, t, l, m};
          if (genuine_only && !p.genuine()) continue;
          if (is_feasible(p).ok) out.push_back(p);
        }
      }
    }
  }
  return out;
}

DsrgParams complement_params(const DsrgParams& p) {
  if (!is_feasible(p).ok) throw InputError("complement_params: parameter set " + p.to_string() + " is not feasible");
  return DsrgParams{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.t - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
}

std::vector<std::uint32_t> square_counts(const Digraph& g) {
  const std::size_t n = g.order();
  const Digraph in = g.transposed();
  std::vector<std::uint32_t> out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto rx = g.row(static_cast<Point>(x));
    for (std::size_t y = 0; y < n; ++y) {
      auto cy = in.row(static_cast<Point>(y));
      std::uint32_t c = 0;
      for (std::size_t w = 0; w < rx.size(); ++w) c += static_cast<std::uint32_t>(std::popcount(rx[w] & cy[w]));
      out[x * n + y] = c;
    }
  }
  return out;
}

namespace {

std::string vtx(std::size_t v) { return std::to_string(v + 1); }

}  // namespace

Verdict verify(const Digraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return Verdict{std::nullopt, "empty digraph"};
  const std::int64_t k = static_cast<std::int64_t>(g.out_degree(0));
  for (std::size_t x = 1; x < n; ++x)
    if (static_cast<std::int64_t>(g.out_degree(static_cast<Point>(x))) != k)
      return Verdict{std::nullopt, "out-degree of vertex " + vtx(x) + " differs from vertex 1"};
  const Digraph in = g.transposed();
  for (std::size_t x = 0; x < n; ++x)
    if (static_cast<std::int64_t>(in.out_degree(static_cast<Point>(x))) != k)
      return Verdict{std::nullopt, "in-degree of vertex " + vtx(x) + " differs from out-degree " + std::to_string(k)};

  const auto sq = square_counts(g);
  const std::int64_t t = sq[0];
  for (std::size_t x = 1; x < n; ++x)
    if (sq[x * n + x] != t) return Verdict{std::nullopt, "diag(A^2) differs at vertex " + vtx(x)};

  std::optional<std::int64_t> lambda, mu;
  std::size_t lx = 0, ly = 0, mx = 0, my = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::int64_t c = sq[x * n + y];
      if (g.has_arc(static_cast<Point>(x), static_cast<Point>(y))) {
        if (!lambda) {
          lambda = c, lx = x, ly = y;
        } else if (*lambda != c) {
          return Verdict{std::nullopt, "lambda not constant: arcs (" + vtx(lx) + "," + vtx(ly) + ") and (" + vtx(x) +
                                           "," + vtx(y) + ")"};
        }
      } else {
        if (!mu) {
          mu = c, mx = x, my = y;
        } else if (*mu != c) {
          return Verdict{std::nullopt, "mu not constant: non-arcs (" + vtx(mx) + "," + vtx(my) + ") and (" + vtx(x) +
                                           "," + vtx(y) + ")"};
        }
      }
    }
  }
  return Verdict{DsrgParams{static_cast<std::int64_t>(n), k, t, lambda.value_or(0), mu.value_or(0)}, {}};
}

Digraph complement(const Digraph& g) {
  const std::size_t n = g.order();
  Digraph out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !g.has_arc(static_cast<Point>(x), static_cast<Point>(y)))
        out.add_arc(static_cast<Point>(x), static_cast<Point>(y));
  return out;
}

Digraph reverse(const Digraph& g) { return g.transposed(); }

}  // namespace dsrg
