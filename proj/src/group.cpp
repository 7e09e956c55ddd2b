#include "xmnlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace xmnlab {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("XMNLAB_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOrderCap;
}

element_t Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) {
    throw std::out_of_range("permutation " + p.to_cycle_string() + " is not an element of " + name_);
  }
  return static_cast<element_t>(it - elements_.begin());
}

Group group_from_generators(const std::vector<Permutation>& gens, std::string name,
                            std::size_t order_cap) {
  const std::size_t degree = gens.empty() ? 1 : gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generators of " + name + " have mixed degrees " +
                                  std::to_string(degree) + " and " + std::to_string(g.degree()));
    }
  }

  std::unordered_map<Permutation, element_t, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(degree)};
  seen.emplace(found.front(), 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(found[cur], g);
      if (seen.contains(next)) continue;
      if (found.size() >= order_cap) {
        throw LimitError("closure of " + name + " exceeds the order cap of " +
                         std::to_string(order_cap));
      }
      seen.emplace(next, static_cast<element_t>(found.size()));
      found.push_back(std::move(next));
      frontier.push_back(found.size() - 1);
    }
  }

  std::sort(found.begin(), found.end());
  const std::size_t n = found.size();
  seen.clear();
  for (std::size_t i = 0; i < n; ++i) seen.emplace(found[i], static_cast<element_t>(i));

  Group group;
  group.name_ = std::move(name);
  group.degree_ = degree;
  group.generators_ = gens;
  group.mult_.resize(n * n);
  group.inv_.resize(n);
  group.element_orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      group.mult_[i * n + j] = seen.at(compose(found[i], found[j]));
    }
    group.inv_[i] = seen.at(found[i].inverse());
    group.element_orders_[i] = perm_order(found[i]);
  }
  group.elements_ = std::move(found);
  return group;
}

}  // namespace xmnlab
