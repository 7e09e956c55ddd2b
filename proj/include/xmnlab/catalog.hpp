#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xmnlab/group.hpp"

namespace xmnlab {

// Expected class memberships, used as fixtures against the computed predicates.
struct KnownFlags {
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool odd = false;
};

struct CatalogEntry {
  std::string name;
  // e.g. "cyclic", "dihedral", "product"
  std::string constructor;
  std::vector<std::size_t> params;
  std::size_t expected_order = 1;
  KnownFlags flags;
  // Factor names for direct products.
  std::vector<std::string> factors;
};

// Cyclic group of order k on k points (k = 1 gives the trivial group).
Group make_cyclic(std::size_t k, std::size_t order_cap = default_order_cap());
// Symmetries of a k-gon, order 2k, on k points for k >= 3. k = 1 and k = 2
// give the groups of order 2 and 4 on 2 and 4 points.
Group make_dihedral(std::size_t k, std::size_t order_cap = default_order_cap());
Group make_symmetric(std::size_t k, std::size_t order_cap = default_order_cap());
Group make_alternating(std::size_t k, std::size_t order_cap = default_order_cap());
// Regular action on its 8 elements.
Group make_quaternion8();
// Action on the 8 nonzero vectors of F_3^2.
Group make_sl2_3();
// x -> x + 1, x -> 2x on Z/5.
Group make_frobenius20();

// Action on the disjoint union of the two point sets.
Group direct_product(const Group& a, const Group& b, std::size_t order_cap = default_order_cap());

// Named base groups and all pairwise direct products of nontrivial base
// groups with order <= max_order, sorted by (order, name).
std::vector<CatalogEntry> catalog_scan(std::size_t max_order);

// Builds the group described by an entry.
Group build_entry(const CatalogEntry& entry, std::size_t order_cap = default_order_cap());

// Resolves a name such as "A5", "D8" or "C2xS3", including groups beyond any
// scan limit. Returns nullopt for names outside the naming scheme.
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

}  // namespace xmnlab
