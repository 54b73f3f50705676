#include "dsrg/closure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dsrg/error.hpp"

namespace dsrg {

namespace {

struct SignatureHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Assigns colors 0..m-1 to the distinct signatures in lexicographic order.
// Equal hashes are resolved by full comparison inside unordered_map.
ColorPartition number_signatures(std::size_t n, const std::vector<std::vector<std::uint64_t>>& sig) {
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, SignatureHash> ids;
  ids.reserve(sig.size());
  std::vector<const std::vector<std::uint64_t>*> distinct;
  std::vector<std::uint32_t> provisional(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(sig[i], static_cast<std::uint32_t>(distinct.size()));
    if (inserted) distinct.push_back(&it->first);
    provisional[i] = it->second;
  }
  std::vector<std::uint32_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return *distinct[a] < *distinct[b]; });
  std::vector<std::uint32_t> final_id(distinct.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) final_id[order[pos]] = static_cast<std::uint32_t>(pos);

  ColorPartition out;
  out.n = n;
  out.rank = distinct.size();
  out.colors.resize(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) out.colors[i] = final_id[provisional[i]];
  return out;
}

}  // namespace

ColorPartition initial_partition(std::size_t n, std::span<const BinaryMatrix> matrices) {
  if (n == 0) throw InputError("closure of an empty matrix set order 0");
  for (const auto& m : matrices)
    if (m.size() != n * n) throw InputError("closure input matrices must all be n x n");
  std::vector<std::vector<std::uint64_t>> sig(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& s = sig[x * n + y];
      s.reserve(1 + matrices.size());
      s.push_back(x == y ? 0 : 1);
      for (const auto& m : matrices) s.push_back(m[x * n + y] != 0);
    }
  }
  return number_signatures(n, sig);
}

ColorPartition initial_partition(const Digraph& g) {
  const std::size_t n = g.order();
  BinaryMatrix m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m[x * n + y] = g.has_arc(static_cast<Point>(x), static_cast<Point>(y));
  return initial_partition(n, std::span<const BinaryMatrix>(&m, 1));
}

ColorPartition wl_round(const ColorPartition& partition) {
  const std::size_t n = partition.n;
  const std::uint64_t r = partition.rank;
  const auto& c = partition.colors;
  std::vector<std::vector<std::uint64_t>> sig(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& s = sig[x * n + y];
      s.resize(n + 2);
      s[0] = c[x * n + y];
      s[1] = c[y * n + x];
      for (std::size_t z = 0; z < n; ++z) s[2 + z] = c[x * n + z] * r + c[z * n + y];
      std::sort(s.begin() + 2, s.end());
    }
  }
  ColorPartition next = number_signatures(n, sig);
  next.stable = next.rank == partition.rank;
  return next;
}

ColorPartition stable_partition(ColorPartition partition) {
  while (!partition.stable) partition = wl_round(partition);
  return partition;
}

CoherentConfig coherent_closure(std::size_t n, std::span<const BinaryMatrix> matrices) {
  ColorPartition p = stable_partition(initial_partition(n, matrices));
  return CoherentConfig::from_color_matrix(n, std::move(p.colors));
}

CoherentConfig coherent_closure(const Digraph& g) {
  ColorPartition p = stable_partition(initial_partition(g));
  return CoherentConfig::from_color_matrix(g.order(), std::move(p.colors));
}

}  // namespace dsrg
