#include "dsrg/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "dsrg/error.hpp"

namespace dsrg {

namespace {

std::string pair_str(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

}  // namespace

CoherentConfig CoherentConfig::from_color_matrix(std::size_t n, std::vector<std::uint32_t> colors) {
  if (n == 0) throw InputError("color matrix of order 0");
  if (colors.size() != n * n) throw InputError("color matrix is not square");
  std::uint32_t max_color = 0;
  for (std::uint32_t c : colors) max_color = std::max(max_color, c);
  const std::size_t r = std::size_t{max_color} + 1;
  if (r > kMaxTensorRank) throw LimitError("rank " + std::to_string(r) + " exceeds the tensor cap");

  CoherentConfig cfg;
  cfg.n_ = n;
  cfg.r_ = r;
  cfg.colors_ = std::move(colors);
  const auto& col = cfg.colors_;

  // First occurrence of every color, row-major.
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> rep(r, kNone);
  for (std::size_t i = 0; i < n * n; ++i)
    if (rep[col[i]] == kNone) rep[col[i]] = i;
  for (std::size_t c = 0; c < r; ++c)
    if (rep[c] == kNone) throw InputError("colors are not contiguous: color " + std::to_string(c) + " unused");

  // Axiom (i).
  cfg.diagonal_flag_.assign(r, 0);
  for (std::size_t x = 0; x < n; ++x) cfg.diagonal_flag_[col[x * n + x]] = 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && cfg.diagonal_flag_[col[x * n + y]])
        throw AxiomError("axiom (i): color " + std::to_string(col[x * n + y]) + " meets the diagonal and " +
                         pair_str(x, y));
  for (std::size_t c = 0; c < r; ++c)
    if (cfg.diagonal_flag_[c]) cfg.diagonal_.push_back(static_cast<std::uint32_t>(c));

  // Axiom (ii).
  cfg.transpose_.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    const std::size_t x = rep[c] / n, y = rep[c] % n;
    cfg.transpose_[c] = col[y * n + x];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (col[y * n + x] != cfg.transpose_[col[x * n + y]])
        throw AxiomError("axiom (ii): transpose of color " + std::to_string(col[x * n + y]) +
                         " is not a single color, witness " + pair_str(x, y));

  // Intersection numbers from one representative pair per color.
  cfg.tensor_.assign(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t x = rep[k] / n, y = rep[k] % n;
    for (std::size_t z = 0; z < n; ++z) ++cfg.tensor_[(std::size_t{col[x * n + z]} * r + col[z * n + y]) * r + k];
  }

  // Axiom (iii): every pair of color k sees the same counts as the representative.
  std::vector<std::int32_t> count(r * r, 0);
  std::vector<std::size_t> touched;
  touched.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t k = col[x * n + y];
      touched.clear();
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t ij = std::size_t{col[x * n + z]} * r + col[z * n + y];
        if (count[ij]++ == 0) touched.push_back(ij);
      }
      for (std::size_t ij : touched) {
        if (count[ij] != cfg.tensor_[ij * r + k]) {
          throw AxiomError("axiom (iii): p[" + std::to_string(ij / r) + "][" + std::to_string(ij % r) + "]^" +
                           std::to_string(k) + " is " + std::to_string(cfg.tensor_[ij * r + k]) + " at " +
                           pair_str(rep[k] / n, rep[k] % n) + " but " + std::to_string(count[ij]) + " at " +
                           pair_str(x, y));
        }
      }
      for (std::size_t ij : touched) count[ij] = 0;
    }
  }

  cfg.valencies_.assign(r, 0);
  for (std::size_t c = 0; c < r; ++c) {
    const std::size_t x = rep[c] / n;
    std::int64_t v = 0;
    for (std::size_t y = 0; y < n; ++y) v += col[x * n + y] == c;
    cfg.valencies_[c] = v;
  }
  return cfg;
}

std::vector<std::uint8_t> CoherentConfig::relation_mask(std::span<const std::uint32_t> classes) const {
  std::vector<std::uint8_t> in(r_, 0);
  for (std::uint32_t c : classes) {
    if (c >= r_) throw InputError("class index " + std::to_string(c) + " out of range");
    if (is_diagonal(c)) throw InputError("class " + std::to_string(c) + " is a diagonal color");
    in[c] = 1;
  }
  std::vector<std::uint8_t> mask(n_ * n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) mask[i] = in[colors_[i]];
  return mask;
}

bool is_commutative(const CoherentConfig& cfg) {
  const std::size_t r = cfg.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!std::equal(cfg.p_row(i, j).begin(), cfg.p_row(i, j).end(), cfg.p_row(j, i).begin())) return false;
  return true;
}

std::size_t SchemeClassProfile::symmetric_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const ClassInfo& c) { return c.symmetric; }));
}

std::size_t SchemeClassProfile::antisymmetric_pairs() const { return (classes.size() - symmetric_count()) / 2; }

SchemeClassProfile class_profile(const CoherentConfig& cfg) {
  if (!cfg.homogeneous()) throw InputError("class profile requires a homogeneous configuration");
  SchemeClassProfile profile;
  for (std::size_t c = 0; c < cfg.rank(); ++c) {
    if (cfg.is_diagonal(c)) continue;
    profile.classes.push_back(ClassInfo{static_cast<std::uint32_t>(c), cfg.valency(c), cfg.transpose(c) == c,
                                        cfg.transpose(c)});
  }
  return profile;
}

CoherentConfig schurian(const PermGroup& group) {
  TwoOrbits orbs = two_orbits(group);
  return CoherentConfig::from_color_matrix(orbs.degree, std::move(orbs.colors));
}

CoherentConfig parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> values;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw InputError("scheme file: bad token '" + tok + "'");
        values.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("scheme file: bad token '" + tok + "'");
      }
    }
  }
  if (values.size() < 2) throw InputError("scheme file: missing 'n r' header");
  const long long n = values[0], r = values[1];
  if (n < 1 || r < 1) throw InputError("scheme file: header values must be positive");
  if (static_cast<long long>(values.size()) != 2 + n * n)
    throw InputError("scheme file: expected " + std::to_string(n * n) + " entries, found " +
                     std::to_string(values.size() - 2));
  std::vector<std::uint32_t> colors(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const long long v = values[2 + i];
    if (v < 0 || v >= r) throw InputError("scheme file: color " + std::to_string(v) + " outside 0..r-1");
    colors[i] = static_cast<std::uint32_t>(v);
  }
  CoherentConfig cfg = CoherentConfig::from_color_matrix(static_cast<std::size_t>(n), std::move(colors));
  if (static_cast<long long>(cfg.rank()) != r)
    throw InputError("scheme file: header rank " + std::to_string(r) + " but " + std::to_string(cfg.rank()) +
                     " colors used");
  return cfg;
}

std::string export_scheme(const CoherentConfig& cfg) {
  std::string out = std::to_string(cfg.order()) + " " + std::to_string(cfg.rank()) + "\n";
  const std::size_t n = cfg.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += std::to_string(cfg.color(static_cast<Point>(x), static_cast<Point>(y)));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dsrg
