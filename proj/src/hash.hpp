#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dsrg::detail {

inline std::uint64_t hash_words(std::span<const std::uint32_t> words) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t w : words) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return static_cast<std::size_t>(hash_words(v));
  }
};

}  // namespace dsrg::detail
