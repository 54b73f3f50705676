#pragma once

// Finite groups given by multiplication tables, Cayley digraphs and the
// group-ring test X*X = t e + lambda X + mu (G - e - X).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // `table[a * order + b]` is the index of a*b. Checks the Latin square
  // property, the identity law and associativity; throws AxiomError otherwise.
  // Empty `labels` defaults to "1".."order".
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity, std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  const std::string& label(Element a) const { return labels_[a]; }
  // Looks up a label, ignoring whitespace. Throws InputError if unknown.
  Element find(std::string_view label) const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

// Two ways of letting the top group S_2 act on the base Z_4 x Z_4 in the
// product of (g; f) and (h; f'):
//   LeftActs:  (gh; f + f' o g)
//   RightActs: (gh; f o h + f')
// RightActs is the opposite group of LeftActs on the same labels.
enum class WreathConvention { LeftActs, RightActs };

// S_2 wr Z_4 of order 32. Element "ijl" is (pi^i; x^j, x^l) with pi = (1 2)
// and x a generator of Z_4.
FiniteGroup wreath_s2_z4(WreathConvention convention = WreathConvention::LeftActs);

// <a, b | a^13 = b^3 = e, ba = a^9 b>, elements a^i b^j with labels such as
// "e", "a", "a^5", "b", "ab", "a^2b", "b^2", "a^3b^2".
FiniteGroup metacyclic_39();

// A subset X of G \ {e}, sorted and without repetitions.
struct ConnectionSet {
  std::vector<Element> elements;
};

// Builds a connection set from labels. Throws InputError for unknown labels,
// repeated labels, an empty set, or the identity.
ConnectionSet connection_set(const FiniteGroup& group, const std::vector<std::string>& labels);
ConnectionSet connection_set(const FiniteGroup& group, std::vector<Element> elements);

// Multiplicity of each group element in the group-ring square X*X.
std::vector<std::int64_t> group_ring_square(const FiniteGroup& group, const ConnectionSet& x);

Verdict group_ring_test(const FiniteGroup& group, const ConnectionSet& x);

// Arc (u, v) iff v u^-1 in X.
Digraph cayley_digraph(const FiniteGroup& group, const ConnectionSet& x);

// Group table file: "order identity_index" then `order` rows of 1-based
// element indices.
FiniteGroup parse_group_table(std::string_view text);

}  // namespace dsrg
