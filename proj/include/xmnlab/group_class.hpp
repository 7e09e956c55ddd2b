#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "xmnlab/group.hpp"
#include "xmnlab/rational.hpp"

namespace xmnlab {

// Registry order is the report order.
enum class ClassId { abelian, nilpotent, soluble, odd_order, fitted_universal };

std::string_view to_string(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view text);

struct ClosureProperties {
  bool subgroup_closed = true;
  bool quotient_closed = true;
  bool extension_closed = true;
};

// A group class together with a threshold gamma in (0,1): any finite group
// whose probability of a random ordered pair generating a class member
// exceeds gamma is itself in the class.
struct ClassSpec {
  ClassId id;
  Rational gamma;
  ClosureProperties closure;
  std::string provenance;

  // 2 / (1 - gamma), the base of the size bound.
  Rational bound_base() const;
  std::string_view name() const { return to_string(id); }
};

const std::vector<ClassSpec>& class_registry();
const ClassSpec& class_spec(ClassId id);

// The universal class is decided with the soluble predicate; soluble groups
// form one admissible subgroup/quotient/extension-closed class.
inline constexpr std::string_view kFittedUniversalProxy = "soluble";

// A subgroup of a host Group, stored as a membership mask plus the sorted
// list of member indices.
class SubgroupSet {
 public:
  SubgroupSet(const Group& host, boost::dynamic_bitset<> mask);

  const Group& host() const { return *host_; }
  std::size_t order() const { return members_.size(); }
  bool contains(element_t e) const { return mask_.test(e); }
  const std::vector<element_t>& members() const { return members_; }
  const boost::dynamic_bitset<>& mask() const { return mask_; }
  bool is_trivial() const { return members_.size() == 1; }

 private:
  const Group* host_;
  boost::dynamic_bitset<> mask_;
  std::vector<element_t> members_;
};

// Smallest subgroup containing `seeds` (and the identity).
SubgroupSet subgroup_closure(const Group& g, std::span<const element_t> seeds);
SubgroupSet whole_group(const Group& g);

// a^-1 b^-1 a b
inline element_t commutator(const Group& g, element_t a, element_t b) {
  return g.mult(g.mult(g.inv(a), g.inv(b)), g.mult(a, b));
}

// Subgroup generated by all [a, b] with a in A, b in B.
SubgroupSet commutator_subgroup(const Group& g, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h);

// Orders of H, H', H'', ... up to the first repeated term.
std::vector<std::size_t> derived_series_orders(const Group& g, const SubgroupSet& h);
// Orders of the lower central series H = γ1 ≥ γ2 = [γ1,H] ≥ ... until it stabilizes.
std::vector<std::size_t> lower_central_series_orders(const Group& g, const SubgroupSet& h);

bool is_abelian(const Group& g, const SubgroupSet& h);
bool is_soluble(const Group& g, const SubgroupSet& h);
bool is_nilpotent(const Group& g, const SubgroupSet& h);
bool is_odd_order(const SubgroupSet& h);

// Membership of H in the class `id` (fitted_universal uses the soluble predicate).
bool in_class(const Group& g, const SubgroupSet& h, ClassId id);

// Whether <x, y> lies in the class.
bool pair_in_class(const Group& g, element_t x, element_t y, const ClassSpec& cls);

// pair_in_class with a memo of class verdicts keyed by the generated
// subgroup. One instance per thread; not shareable.
class PairClassifier {
 public:
  PairClassifier(const Group& g, ClassId id) : group_(&g), id_(id) {}
  bool operator()(element_t x, element_t y);
  std::size_t distinct_subgroups() const { return verdicts_.size(); }

 private:
  const Group* group_;
  ClassId id_;
  std::map<boost::dynamic_bitset<>, bool> verdicts_;
};

}  // namespace xmnlab
