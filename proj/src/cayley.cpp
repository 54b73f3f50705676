#include "dsrg/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dsrg/error.hpp"

namespace dsrg {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  if (order_ == 0) throw InputError("group of order 0");
  if (table_.size() != order_ * order_) throw InputError("multiplication table is not order x order");
  if (identity_ >= order_) throw InputError("identity index out of range");
  for (Element v : table_)
    if (v >= order_) throw InputError("multiplication table entry out of range");
  if (labels_.empty()) {
    for (std::size_t a = 0; a < order_; ++a) labels_.push_back(std::to_string(a + 1));
  }
  if (labels_.size() != order_) throw InputError("label count does not match group order");

  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      if (seen[mul(a, b)]++) throw AxiomError("multiplication table row " + std::to_string(a + 1) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      if (seen[mul(b, a)]++) throw AxiomError("multiplication table column " + std::to_string(a + 1) + " is not a permutation");
    }
  }
  for (Element a = 0; a < order_; ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a) throw AxiomError("identity law fails at element " + labels_[a]);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      for (Element c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw AxiomError("associativity fails at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");

  inverse_.resize(order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Element FiniteGroup::find(std::string_view label) const {
  const std::string key = strip_spaces(label);
  for (Element a = 0; a < order_; ++a)
    if (labels_[a] == key) return a;
  throw InputError("unknown group element '" + std::string(label) + "'");
}

FiniteGroup wreath_s2_z4(WreathConvention convention) {
  // Index = i*16 + j*4 + l for (pi^i; x^j, x^l).
  constexpr std::size_t kOrder = 32;
  std::vector<Element> table(kOrder * kOrder);
  std::vector<std::string> labels(kOrder);
  for (std::size_t a = 0; a < kOrder; ++a) {
    labels[a] = std::to_string(a / 16) + std::to_string((a / 4) % 4) + std::to_string(a % 4);
  }
  for (std::size_t a = 0; a < kOrder; ++a) {
    const std::size_t g = a / 16;
    const std::size_t f[2] = {(a / 4) % 4, a % 4};
    for (std::size_t b = 0; b < kOrder; ++b) {
      const std::size_t h = b / 16;
      const std::size_t fp[2] = {(b / 4) % 4, b % 4};
      std::size_t out[2];
      for (std::size_t i = 0; i < 2; ++i) {
        if (convention == WreathConvention::LeftActs)
          out[i] = (f[i] + fp[g ? 1 - i : i]) % 4;
        else
          out[i] = (f[h ? 1 - i : i] + fp[i]) % 4;
      }
      table[a * kOrder + b] = static_cast<Element>(((g + h) % 2) * 16 + out[0] * 4 + out[1]);
    }
  }
  return FiniteGroup(kOrder, std::move(table), 0, std::move(labels));
}

FiniteGroup metacyclic_39() {
  // Index = i*3 + j for a^i b^j; (a^i b^j)(a^k b^l) = a^(i + k 9^j) b^(j+l).
  constexpr std::size_t kOrder = 39;
  const std::size_t pow9[3] = {1, 9, 81 % 13};
  std::vector<Element> table(kOrder * kOrder);
  std::vector<std::string> labels(kOrder);
  for (std::size_t i = 0; i < 13; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::string s;
      if (i == 1) s += "a";
      if (i > 1) s += "a^" + std::to_string(i);
      if (j == 1) s += "b";
      if (j == 2) s += "b^2";
      labels[i * 3 + j] = s.empty() ? "e" : s;
    }
  }
  for (std::size_t a = 0; a < kOrder; ++a) {
    const std::size_t i = a / 3, j = a % 3;
    for (std::size_t b = 0; b < kOrder; ++b) {
      const std::size_t k = b / 3, l = b % 3;
      table[a * kOrder + b] = static_cast<Element>(((i + k * pow9[j]) % 13) * 3 + (j + l) % 3);
    }
  }
  return FiniteGroup(kOrder, std::move(table), 0, std::move(labels));
}

ConnectionSet connection_set(const FiniteGroup& group, std::vector<Element> elements) {
  if (elements.empty()) throw InputError("connection set is empty");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw InputError("connection set has a repeated element");
  for (Element e : elements) {
    if (e >= group.order()) throw InputError("connection set element out of range");
    if (e == group.identity()) throw InputError("connection set contains the identity");
  }
  return ConnectionSet{std::move(elements)};
}

ConnectionSet connection_set(const FiniteGroup& group, const std::vector<std::string>& labels) {
  std::vector<Element> elements;
  elements.reserve(labels.size());
  for (const auto& l : labels) elements.push_back(group.find(l));
  return connection_set(group, std::move(elements));
}

std::vector<std::int64_t> group_ring_square(const FiniteGroup& group, const ConnectionSet& x) {
  std::vector<std::int64_t> counts(group.order(), 0);
  for (Element a : x.elements)
    for (Element b : x.elements) ++counts[group.mul(a, b)];
  return counts;
}

Verdict group_ring_test(const FiniteGroup& group, const ConnectionSet& x) {
  if (x.elements.empty()) throw InputError("connection set is empty");
  std::vector<char> in_x(group.order(), 0);
  for (Element a : x.elements) {
    if (a == group.identity()) throw InputError("connection set contains the identity");
    in_x[a] = 1;
  }
  const auto counts = group_ring_square(group, x);
  const std::int64_t t = counts[group.identity()];
  std::optional<std::int64_t> lambda, mu;
  std::optional<Element> lw, mw;
  for (Element g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    auto& slot = in_x[g] ? lambda : mu;
    auto& witness = in_x[g] ? lw : mw;
    if (!slot) {
      slot = counts[g];
      witness = g;
    } else if (*slot != counts[g]) {
      return Verdict{std::nullopt, std::string(in_x[g] ? "lambda" : "mu") + " not constant: coefficient of " +
                                       group.label(*witness) + " is " + std::to_string(*slot) + ", of " +
                                       group.label(g) + " is " + std::to_string(counts[g])};
    }
  }
  return Verdict{DsrgParams{static_cast<std::int64_t>(group.order()), static_cast<std::int64_t>(x.elements.size()), t,
                            lambda.value_or(0), mu.value_or(0)},
                 {}};
}

Digraph cayley_digraph(const FiniteGroup& group, const ConnectionSet& x) {
  Digraph g(group.order());
  for (Element u = 0; u < group.order(); ++u)
    for (Element s : x.elements) {
      if (s == group.identity()) throw InputError("connection set contains the identity");
      g.add_arc(u, group.mul(s, u));
    }
  return g;
}

FiniteGroup parse_group_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> v;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw InputError("group table: bad token '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InputError("group table: bad token '" + tok + "'");
    }
  }
  if (v.size() < 2) throw InputError("group table: missing 'order identity_index' header");
  const long long order = v[0], identity = v[1];
  if (order < 1) throw InputError("group table: order must be positive");
  if (static_cast<long long>(v.size()) != 2 + order * order)
    throw InputError("group table: expected " + std::to_string(order * order) + " entries");
  if (identity < 1 || identity > order) throw InputError("group table: identity index out of range");
  std::vector<Element> table(static_cast<std::size_t>(order * order));
  for (std::size_t i = 0; i < table.size(); ++i) {
    const long long e = v[2 + i];
    if (e < 1 || e > order) throw InputError("group table: entry out of range 1..order");
    table[i] = static_cast<Element>(e - 1);
  }
  return FiniteGroup(static_cast<std::size_t>(order), std::move(table), static_cast<Element>(identity - 1));
}

}  // namespace dsrg
