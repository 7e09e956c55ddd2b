#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xmnlab/permutation.hpp"

namespace xmnlab {

// Index of an element inside its host Group. Index 0 is always the identity.
using element_t = std::uint32_t;
inline constexpr element_t kIdentity = 0;

inline constexpr std::size_t kDefaultOrderCap = 1000;

// kDefaultOrderCap unless XMNLAB_ORDER_CAP holds a positive integer.
std::size_t default_order_cap();

// A finite permutation group with every element enumerated.
//
// Elements are sorted lexicographically by image array, which puts the
// identity at index 0. Multiplication and inversion are table lookups;
// mult(i, j) is the index of elements()[i] ∘ elements()[j].
// Immutable after construction.
class Group {
 public:
  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(element_t i) const { return elements_[i]; }
  // Generators the group was built from (possibly empty).
  const std::vector<Permutation>& generators() const { return generators_; }

  element_t mult(element_t i, element_t j) const { return mult_[i * elements_.size() + j]; }
  element_t inv(element_t i) const { return inv_[i]; }

  // Index of `p`; throws std::out_of_range if p is not an element.
  element_t index_of(const Permutation& p) const;

  // Element order of the element at index i (cached).
  std::uint64_t element_order(element_t i) const { return element_orders_[i]; }

 private:
  friend Group group_from_generators(const std::vector<Permutation>&, std::string, std::size_t);

  std::string name_;
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<element_t> mult_;
  std::vector<element_t> inv_;
  std::vector<std::uint64_t> element_orders_;
};

// Enumerates the closure of `gens` breadth-first and fills the tables.
// Empty `gens` yields the trivial group on one point.
// Throws std::invalid_argument on mixed degrees and LimitError when the
// closure grows past `order_cap`.
Group group_from_generators(const std::vector<Permutation>& gens, std::string name,
                            std::size_t order_cap = default_order_cap());

}  // namespace xmnlab
