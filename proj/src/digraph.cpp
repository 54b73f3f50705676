#include "dsrg/digraph.hpp"

#include <bit>
#include <string>

#include "dsrg/error.hpp"

namespace dsrg {

Digraph::Digraph(std::size_t order) : n_(order), words_((order + 63) / 64), bits_(n_ * words_, 0) {}

Digraph Digraph::from_arcs(std::size_t order, std::span<const std::pair<Point, Point>> arcs) {
  Digraph g(order);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

void Digraph::add_arc(Point u, Point v) {
  if (u >= n_ || v >= n_)
    throw InputError("arc (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") out of range");
  if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void Digraph::remove_arc(Point u, Point v) { bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

std::size_t Digraph::out_degree(Point u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Digraph::arc_count() const {
  std::size_t m = 0;
  for (std::uint64_t w : bits_) m += static_cast<std::size_t>(std::popcount(w));
  return m;
}

std::vector<std::pair<Point, Point>> Digraph::arcs() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(arc_count());
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (has_arc(static_cast<Point>(u), static_cast<Point>(v)))
        out.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
  return out;
}

Digraph Digraph::transposed() const {
  Digraph t(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (has_arc(static_cast<Point>(u), static_cast<Point>(v)))
        t.bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return t;
}

Digraph Digraph::relabeled(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw InputError("relabeling degree does not match graph order");
  Digraph out(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    const Point su = sigma(static_cast<Point>(u));
    for (std::size_t v = 0; v < n_; ++v)
      if (has_arc(static_cast<Point>(u), static_cast<Point>(v))) {
        const Point sv = sigma(static_cast<Point>(v));
        out.bits_[su * words_ + (sv >> 6)] |= std::uint64_t{1} << (sv & 63);
      }
  }
  return out;
}

}  // namespace dsrg
