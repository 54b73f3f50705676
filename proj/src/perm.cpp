#include "dsrg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dsrg/error.hpp"
#include "hash.hpp"

namespace dsrg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InputError("permutation images are not a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("cycle notation: unexpected character '" + std::string(1, text[i]) + "'");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree)
        throw InputError("cycle notation: point " + std::to_string(value) + " out of range 1.." +
                         std::to_string(degree));
      if (used[value - 1]) throw InputError("cycle notation: point " + std::to_string(value) + " repeated");
      used[value - 1] = 1;
      cycle.push_back(static_cast<Point>(value - 1));
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
      skip_space();
    }
    if (i >= text.size()) throw InputError("cycle notation: unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j) images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("permutation degree mismatch");
  std::vector<Point> images(degree());
  for (std::size_t p = 0; p < degree(); ++p) images[p] = rhs.images_[images_[p]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(degree());
  for (std::size_t p = 0; p < degree(); ++p) images[images_[p]] = static_cast<Point>(p);
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < degree(); ++p)
    if (images_[p] != p) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> done(degree(), 0);
  for (std::size_t p = 0; p < degree(); ++p) {
    if (done[p] || images_[p] == p) continue;
    out += '(';
    Point q = static_cast<Point>(p);
    bool first = true;
    while (!done[q]) {
      done[q] = 1;
      if (!first) out += ',';
      out += std::to_string(q + 1);
      first = false;
      q = images_[q];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw InputError("permutation group of degree 0");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InputError("generator degree does not match group degree");
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  if (degree < 2) return trivial(degree);
  std::vector<Point> swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), Point{0});
  std::swap(swap[0], swap[1]);
  for (std::size_t p = 0; p < degree; ++p) cycle[p] = static_cast<Point>((p + 1) % degree);
  return PermGroup(degree, {Permutation(std::move(swap)), Permutation(std::move(cycle))});
}

PermGroup PermGroup::cyclic(std::size_t degree) {
  std::vector<Point> cycle(degree);
  for (std::size_t p = 0; p < degree; ++p) cycle[p] = static_cast<Point>((p + 1) % degree);
  return PermGroup(degree, {Permutation(std::move(cycle))});
}

Object canonical_object(Object obj, ObjectKind kind) {
  if (kind == ObjectKind::Set) {
    std::sort(obj.begin(), obj.end());
    if (std::adjacent_find(obj.begin(), obj.end()) != obj.end())
      throw InputError("set object contains a repeated point");
  }
  return obj;
}

Object act(const Permutation& g, const Object& obj, ObjectKind kind) {
  Object out(obj.size());
  for (std::size_t i = 0; i < obj.size(); ++i) out[i] = g(obj[i]);
  if (kind == ObjectKind::Set) std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_seed(const PermGroup& group, const Object& seed) {
  if (seed.empty()) throw InputError("empty seed object");
  for (Point p : seed)
    if (p >= group.degree())
      throw InputError("point " + std::to_string(p + 1) + " out of range 1.." + std::to_string(group.degree()));
}

}  // namespace

std::vector<Object> orbit(const PermGroup& group, const Object& seed, ObjectKind kind) {
  check_seed(group, seed);
  std::vector<Object> out{canonical_object(seed, kind)};
  std::unordered_set<Object, detail::VectorHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : group.generators()) {
      Object img = act(g, out[head], kind);
      if (seen.insert(img).second) out.push_back(std::move(img));
    }
  }
  return out;
}

std::vector<Point> point_orbit(const PermGroup& group, Point seed) {
  std::vector<Point> out;
  for (const auto& obj : orbit(group, Object{seed}, ObjectKind::Tuple)) out.push_back(obj.front());
  return out;
}

std::ptrdiff_t InducedAction::index_of(const Object& obj) const {
  Object key = canonical_object(obj, kind);
  auto it = std::find(domain.begin(), domain.end(), key);
  return it == domain.end() ? -1 : it - domain.begin();
}

namespace {

std::unordered_map<Object, Point, detail::VectorHash> domain_index(const std::vector<Object>& domain) {
  std::unordered_map<Object, Point, detail::VectorHash> index;
  index.reserve(domain.size() * 2);
  for (std::size_t i = 0; i < domain.size(); ++i) index.emplace(domain[i], static_cast<Point>(i));
  return index;
}

Permutation induce_with(const std::vector<Object>& domain, ObjectKind kind,
                        const std::unordered_map<Object, Point, detail::VectorHash>& index,
                        const Permutation& g) {
  std::vector<Point> images(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto it = index.find(act(g, domain[i], kind));
    if (it == index.end()) throw InputError("permutation does not preserve the induced domain");
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

}  // namespace

InducedAction induced_action(const PermGroup& group, const Object& seed, ObjectKind kind) {
  std::vector<Object> domain = orbit(group, seed, kind);
  auto index = domain_index(domain);
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) gens.push_back(induce_with(domain, kind, index, g));
  std::size_t degree = domain.size();
  return InducedAction{kind, std::move(domain), PermGroup(degree, std::move(gens))};
}

Permutation induce(const InducedAction& action, const Permutation& g) {
  return induce_with(action.domain, action.kind, domain_index(action.domain), g);
}

std::vector<std::pair<Point, Point>> TwoOrbits::relation(std::uint32_t c) const {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t x = 0; x < degree; ++x)
    for (std::size_t y = 0; y < degree; ++y)
      if (colors[x * degree + y] == c) out.emplace_back(static_cast<Point>(x), static_cast<Point>(y));
  return out;
}

TwoOrbits two_orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  TwoOrbits out;
  out.degree = n;
  out.colors.assign(n * n, kUnset);
  std::vector<std::size_t> queue;
  auto flood = [&](std::size_t start) {
    const auto color = static_cast<std::uint32_t>(out.rank++);
    out.colors[start] = color;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head] / n, y = queue[head] % n;
      for (const auto& g : group.generators()) {
        const std::size_t img = static_cast<std::size_t>(g(static_cast<Point>(x))) * n + g(static_cast<Point>(y));
        if (out.colors[img] == kUnset) {
          out.colors[img] = color;
          queue.push_back(img);
        }
      }
    }
  };
  for (std::size_t x = 0; x < n; ++x)
    if (out.colors[x * n + x] == kUnset) flood(x * n + x);
  for (std::size_t pair = 0; pair < n * n; ++pair)
    if (out.colors[pair] == kUnset) flood(pair);
  return out;
}

std::vector<std::pair<Point, Point>> orbital(const PermGroup& group, Point x, Point y) {
  check_seed(group, Object{x, y});
  std::vector<std::pair<Point, Point>> out;
  for (const auto& obj : orbit(group, Object{x, y}, ObjectKind::Tuple)) out.emplace_back(obj[0], obj[1]);
  return out;
}

std::uint64_t group_order(const PermGroup& group, std::uint64_t cap) {
  const std::size_t n = group.degree();
  const bool wide = n > 256;
  auto encode = [&](const std::vector<Point>& images) {
    std::string key;
    key.reserve(wide ? 2 * n : n);
    for (Point p : images) {
      key.push_back(static_cast<char>(p & 0xff));
      if (wide) key.push_back(static_cast<char>(p >> 8));
    }
    return key;
  };
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::unordered_set<std::string> seen{encode(id)};
  std::deque<std::vector<Point>> queue{id};
  std::vector<Point> next(n);
  while (!queue.empty()) {
    std::vector<Point> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators()) {
      for (std::size_t p = 0; p < n; ++p) next[p] = g(cur[p]);
      if (seen.insert(encode(next)).second) {
        if (seen.size() > cap) throw LimitError("group order exceeds cap of " + std::to_string(cap));
        queue.push_back(next);
      }
    }
  }
  return seen.size();
}

}  // namespace dsrg
