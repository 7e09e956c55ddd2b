#include "xmnlab/group_class.hpp"

#include <array>
#include <stdexcept>

namespace xmnlab {

namespace {

boost::dynamic_bitset<> closure_mask(const Group& g, boost::dynamic_bitset<> mask,
                                     std::span<const element_t> seeds) {
  mask.set(kIdentity);
  std::vector<element_t> queue;
  for (auto i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) {
    queue.push_back(static_cast<element_t>(i));
  }
  for (element_t s : seeds) {
    if (!mask.test(s)) {
      mask.set(s);
      queue.push_back(s);
    }
  }
  // Right multiplication by the seeds reaches every product of seeds; in a
  // finite group that is the generated subgroup.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const element_t cur = queue[head];
    for (element_t s : seeds) {
      const element_t next = g.mult(cur, s);
      if (!mask.test(next)) {
        mask.set(next);
        queue.push_back(next);
      }
    }
  }
  return mask;
}

std::vector<ClassSpec> build_registry() {
  return {
      {ClassId::abelian, Rational(5, 8), {true, true, false},
       "commuting probability of a nonabelian group is at most 5/8 (Gustafson)"},
      {ClassId::nilpotent, Rational(1, 2), {true, true, false},
       "Guralnick-Wilson Theorem A, nilpotent case: 2/(1-gamma) = 4"},
      {ClassId::soluble, Rational(11, 30), {true, true, true},
       "Guralnick-Wilson Theorem A, soluble case: 2/(1-gamma) = 60/19"},
      {ClassId::odd_order, Rational(1, 4), {true, true, true},
       "Guralnick-Wilson Theorem A, odd-order case: 2/(1-gamma) = 8/3"},
      {ClassId::fitted_universal, Rational(37, 90), {true, true, true},
       "kappa = max(1-53/90, 5/18) for any subgroup/quotient/extension-closed class "
       "(Guralnick-Wilson Proposition 5 with the 53/90 generation bound): 2/(1-gamma) = 180/53"},
  };
}

}  // namespace

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::abelian: return "abelian";
    case ClassId::nilpotent: return "nilpotent";
    case ClassId::soluble: return "soluble";
    case ClassId::odd_order: return "odd_order";
    case ClassId::fitted_universal: return "fitted_universal";
  }
  return "unknown";
}

std::optional<ClassId> parse_class_id(std::string_view text) {
  for (ClassId id : {ClassId::abelian, ClassId::nilpotent, ClassId::soluble, ClassId::odd_order,
                     ClassId::fitted_universal}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

Rational ClassSpec::bound_base() const { return Rational(2) / (Rational(1) - gamma); }

const std::vector<ClassSpec>& class_registry() {
  static const std::vector<ClassSpec> registry = build_registry();
  return registry;
}

const ClassSpec& class_spec(ClassId id) {
  for (const auto& spec : class_registry()) {
    if (spec.id == id) return spec;
  }
  throw std::invalid_argument("class not in registry");
}

SubgroupSet::SubgroupSet(const Group& host, boost::dynamic_bitset<> mask)
    : host_(&host), mask_(std::move(mask)) {
  members_.reserve(mask_.count());
  for (auto i = mask_.find_first(); i != boost::dynamic_bitset<>::npos; i = mask_.find_next(i)) {
    members_.push_back(static_cast<element_t>(i));
  }
}

SubgroupSet subgroup_closure(const Group& g, std::span<const element_t> seeds) {
  for (element_t s : seeds) {
    if (s >= g.order()) throw std::out_of_range("seed index outside the group");
  }
  return SubgroupSet(g, closure_mask(g, boost::dynamic_bitset<>(g.order()), seeds));
}

SubgroupSet whole_group(const Group& g) {
  boost::dynamic_bitset<> mask(g.order());
  mask.set();
  return SubgroupSet(g, std::move(mask));
}

SubgroupSet commutator_subgroup(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  boost::dynamic_bitset<> comms(g.order());
  for (element_t x : a.members()) {
    for (element_t y : b.members()) comms.set(commutator(g, x, y));
  }
  std::vector<element_t> seeds;
  for (auto i = comms.find_first(); i != boost::dynamic_bitset<>::npos; i = comms.find_next(i)) {
    if (i != kIdentity) seeds.push_back(static_cast<element_t>(i));
  }
  return subgroup_closure(g, seeds);
}

SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h) {
  return commutator_subgroup(g, h, h);
}

std::vector<std::size_t> derived_series_orders(const Group& g, const SubgroupSet& h) {
  std::vector<std::size_t> orders{h.order()};
  SubgroupSet cur = h;
  while (!cur.is_trivial()) {
    SubgroupSet next = derived_subgroup(g, cur);
    if (next.order() == cur.order()) break;
    orders.push_back(next.order());
    cur = std::move(next);
  }
  return orders;
}

std::vector<std::size_t> lower_central_series_orders(const Group& g, const SubgroupSet& h) {
  std::vector<std::size_t> orders{h.order()};
  SubgroupSet cur = h;
  while (!cur.is_trivial()) {
    SubgroupSet next = commutator_subgroup(g, cur, h);
    if (next.order() == cur.order()) break;
    orders.push_back(next.order());
    cur = std::move(next);
  }
  return orders;
}

bool is_abelian(const Group& g, const SubgroupSet& h) {
  const auto& m = h.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.mult(m[i], m[j]) != g.mult(m[j], m[i])) return false;
    }
  }
  return true;
}

bool is_soluble(const Group& g, const SubgroupSet& h) {
  return derived_series_orders(g, h).back() == 1;
}

bool is_nilpotent(const Group& g, const SubgroupSet& h) {
  return lower_central_series_orders(g, h).back() == 1;
}

bool is_odd_order(const SubgroupSet& h) { return h.order() % 2 == 1; }

bool in_class(const Group& g, const SubgroupSet& h, ClassId id) {
  switch (id) {
    case ClassId::abelian: return is_abelian(g, h);
    case ClassId::nilpotent: return is_nilpotent(g, h);
    case ClassId::soluble:
    case ClassId::fitted_universal: return is_soluble(g, h);
    case ClassId::odd_order: return is_odd_order(h);
  }
  return false;
}

bool pair_in_class(const Group& g, element_t x, element_t y, const ClassSpec& cls) {
  const std::array<element_t, 2> seeds{x, y};
  return in_class(g, subgroup_closure(g, seeds), cls.id);
}

bool PairClassifier::operator()(element_t x, element_t y) {
  const Group& g = *group_;
  // <x, y> is abelian exactly when x and y commute.
  if (id_ == ClassId::abelian) return g.mult(x, y) == g.mult(y, x);
  const std::array<element_t, 2> seeds{x, y};
  auto mask = closure_mask(g, boost::dynamic_bitset<>(g.order()), seeds);
  if (id_ == ClassId::odd_order) return mask.count() % 2 == 1;
  if (auto it = verdicts_.find(mask); it != verdicts_.end()) return it->second;
  const bool verdict = in_class(g, SubgroupSet(g, mask), id_);
  verdicts_.emplace(std::move(mask), verdict);
  return verdict;
}

}  // namespace xmnlab
