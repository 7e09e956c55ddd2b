#include "xmnlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace xmnlab {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<point_t> images(degree);
  std::iota(images.begin(), images.end(), point_t{0});
  for (std::size_t i = first; i < last; ++i) images[i] = static_cast<point_t>(i + 1);
  images[last] = static_cast<point_t>(first);
  return Permutation(std::move(images));
}

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

bool is_power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

void require_cap(const std::string& name, std::size_t order, std::size_t order_cap) {
  if (order > order_cap) {
    throw LimitError(name + " has order " + std::to_string(order) + ", above the order cap of " +
                     std::to_string(order_cap));
  }
}

CatalogEntry base_entry(std::string name, std::string ctor, std::vector<std::size_t> params,
                        std::size_t order, KnownFlags flags) {
  return CatalogEntry{std::move(name), std::move(ctor), std::move(params), order, flags, {}};
}

CatalogEntry cyclic_entry(std::size_t k) {
  return base_entry("C" + std::to_string(k), "cyclic", {k}, k, {true, true, true, k % 2 == 1});
}

CatalogEntry dihedral_entry(std::size_t k) {
  return base_entry("D" + std::to_string(2 * k), "dihedral", {k}, 2 * k,
                    {false, is_power_of_two(k), true, false});
}

CatalogEntry symmetric_entry(std::size_t k) {
  return base_entry("S" + std::to_string(k), "symmetric", {k}, factorial(k),
                    {k <= 2, k <= 2, k <= 4, k <= 1});
}

CatalogEntry alternating_entry(std::size_t k) {
  return base_entry("A" + std::to_string(k), "alternating", {k}, std::max<std::size_t>(1, factorial(k) / 2),
                    {k <= 3, k <= 3, k <= 4, k <= 3});
}

CatalogEntry product_entry(const CatalogEntry& a, const CatalogEntry& b) {
  CatalogEntry e;
  e.name = a.name + "x" + b.name;
  e.constructor = "product";
  e.expected_order = a.expected_order * b.expected_order;
  e.flags = {a.flags.abelian && b.flags.abelian, a.flags.nilpotent && b.flags.nilpotent,
             a.flags.soluble && b.flags.soluble, a.flags.odd && b.flags.odd};
  e.factors = {a.name, b.name};
  return e;
}

const CatalogEntry kQuaternion = base_entry("Q8", "quaternion8", {}, 8, {false, true, true, false});
const CatalogEntry kSl23 = base_entry("SL(2,3)", "sl2_3", {}, 24, {false, false, true, false});
const CatalogEntry kFrobenius = base_entry("F20", "frobenius20", {}, 20, {false, false, true, false});

std::optional<std::size_t> parse_suffix(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  std::size_t value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(name[i] - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return value;
}

std::optional<CatalogEntry> find_base_entry(const std::string& name) {
  if (name == kQuaternion.name) return kQuaternion;
  if (name == kSl23.name) return kSl23;
  if (name == kFrobenius.name) return kFrobenius;
  if (auto k = parse_suffix(name, 'C'); k && *k >= 1) return cyclic_entry(*k);
  if (auto k = parse_suffix(name, 'D'); k && *k >= 6 && *k % 2 == 0) return dihedral_entry(*k / 2);
  if (auto k = parse_suffix(name, 'S'); k && *k >= 1 && *k <= 10) return symmetric_entry(*k);
  if (auto k = parse_suffix(name, 'A'); k && *k >= 1 && *k <= 10) return alternating_entry(*k);
  return std::nullopt;
}

}  // namespace

Group make_cyclic(std::size_t k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("cyclic group order must be positive");
  const std::string name = "C" + std::to_string(k);
  require_cap(name, k, order_cap);
  if (k == 1) return group_from_generators({}, name, order_cap);
  return group_from_generators({cycle_on(k, 0, k - 1)}, name, order_cap);
}

Group make_dihedral(std::size_t k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("dihedral parameter must be positive");
  const std::string name = "D" + std::to_string(2 * k);
  require_cap(name, 2 * k, order_cap);
  if (k == 1) return group_from_generators({Permutation({1, 0})}, name, order_cap);
  if (k == 2) {
    return group_from_generators({Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})}, name,
                                 order_cap);
  }
  std::vector<point_t> reflection(k);
  for (std::size_t i = 0; i < k; ++i) reflection[i] = static_cast<point_t>((k - i) % k);
  return group_from_generators({cycle_on(k, 0, k - 1), Permutation(std::move(reflection))}, name,
                               order_cap);
}

Group make_symmetric(std::size_t k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("symmetric group degree must be positive");
  const std::string name = "S" + std::to_string(k);
  if (k > 10) throw LimitError(name + " is above any supported order cap");
  require_cap(name, factorial(k), order_cap);
  if (k == 1) return group_from_generators({}, name, order_cap);
  if (k == 2) return group_from_generators({cycle_on(2, 0, 1)}, name, order_cap);
  return group_from_generators({cycle_on(k, 0, 1), cycle_on(k, 0, k - 1)}, name, order_cap);
}

Group make_alternating(std::size_t k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("alternating group degree must be positive");
  const std::string name = "A" + std::to_string(k);
  if (k > 10) throw LimitError(name + " is above any supported order cap");
  require_cap(name, std::max<std::size_t>(1, factorial(k) / 2), order_cap);
  if (k <= 2) return group_from_generators({Permutation(k)}, name, order_cap);
  if (k == 3) return group_from_generators({cycle_on(3, 0, 2)}, name, order_cap);
  // (0 1 2) with an (n or n-1)-cycle of even parity generates A_n.
  const Permutation long_cycle = k % 2 == 1 ? cycle_on(k, 0, k - 1) : cycle_on(k, 1, k - 1);
  return group_from_generators({cycle_on(k, 0, 2), long_cycle}, name, order_cap);
}

Group make_quaternion8() {
  // Unit u in {1, i, j, k} with sign s is element 2u + s.
  // kUnitProduct[a][b] = (unit, negated) for basis_a * basis_b.
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnitProduct{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  auto left_mult = [&](int unit) {
    std::vector<point_t> images(8);
    for (int e = 0; e < 8; ++e) {
      const auto [u, neg] = kUnitProduct[unit][e / 2];
      images[e] = static_cast<point_t>(2 * u + ((e % 2) ^ neg));
    }
    return Permutation(std::move(images));
  };
  return group_from_generators({left_mult(1), left_mult(2)}, "Q8");
}

Group make_sl2_3() {
  // Nonzero vectors (a, b) of F_3^2; index 3a + b - 1.
  auto act = [](int m00, int m01, int m10, int m11) {
    std::vector<point_t> images(8);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        const int c = (m00 * a + m01 * b) % 3;
        const int d = (m10 * a + m11 * b) % 3;
        images[3 * a + b - 1] = static_cast<point_t>(3 * c + d - 1);
      }
    }
    return Permutation(std::move(images));
  };
  return group_from_generators({act(1, 1, 0, 1), act(1, 0, 1, 1)}, "SL(2,3)");
}

Group make_frobenius20() {
  return group_from_generators({cycle_on(5, 0, 4), Permutation({0, 2, 4, 1, 3})}, "F20");
}

Group direct_product(const Group& a, const Group& b, std::size_t order_cap) {
  const std::string name = a.name() + "x" + b.name();
  require_cap(name, a.order() * b.order(), order_cap);
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(shifted(g, 0, degree));
  for (const auto& g : b.generators()) gens.push_back(shifted(g, a.degree(), degree));
  if (gens.empty()) gens.emplace_back(degree);
  return group_from_generators(gens, name, order_cap);
}

std::vector<CatalogEntry> catalog_scan(std::size_t max_order) {
  std::vector<CatalogEntry> base;
  if (max_order >= 1) base.push_back(cyclic_entry(1));
  for (std::size_t k = 2; k <= max_order; ++k) base.push_back(cyclic_entry(k));
  for (std::size_t k = 3; 2 * k <= max_order; ++k) base.push_back(dihedral_entry(k));
  // S1, S2, A1..A3 coincide with cyclic groups already listed.
  for (std::size_t k = 3; k <= 5; ++k) {
    if (factorial(k) <= max_order) base.push_back(symmetric_entry(k));
  }
  for (std::size_t k = 4; k <= 5; ++k) {
    if (factorial(k) / 2 <= max_order) base.push_back(alternating_entry(k));
  }
  for (const auto* e : {&kQuaternion, &kSl23, &kFrobenius}) {
    if (e->expected_order <= max_order) base.push_back(*e);
  }
  auto by_order_name = [](const CatalogEntry& x, const CatalogEntry& y) {
    return std::tie(x.expected_order, x.name) < std::tie(y.expected_order, y.name);
  };
  std::sort(base.begin(), base.end(), by_order_name);

  std::vector<CatalogEntry> all = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].expected_order < 2) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].expected_order * base[j].expected_order > max_order) break;
      all.push_back(product_entry(base[i], base[j]));
    }
  }
  std::sort(all.begin(), all.end(), by_order_name);
  return all;
}

Group build_entry(const CatalogEntry& entry, std::size_t order_cap) {
  if (entry.constructor == "product") {
    auto a = find_base_entry(entry.factors.at(0));
    auto b = find_base_entry(entry.factors.at(1));
    if (!a || !b) throw std::invalid_argument("unknown factor in " + entry.name);
    return direct_product(build_entry(*a, order_cap), build_entry(*b, order_cap), order_cap);
  }
  const std::size_t k = entry.params.empty() ? 0 : entry.params.front();
  if (entry.constructor == "cyclic") return make_cyclic(k, order_cap);
  if (entry.constructor == "dihedral") return make_dihedral(k, order_cap);
  if (entry.constructor == "symmetric") return make_symmetric(k, order_cap);
  if (entry.constructor == "alternating") return make_alternating(k, order_cap);
  require_cap(entry.name, entry.expected_order, order_cap);
  if (entry.constructor == "quaternion8") return make_quaternion8();
  if (entry.constructor == "sl2_3") return make_sl2_3();
  if (entry.constructor == "frobenius20") return make_frobenius20();
  throw std::invalid_argument("unknown constructor " + entry.constructor);
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  std::optional<CatalogEntry> entry;
  if (auto sep = name.find('x'); sep != std::string::npos) {
    auto a = find_base_entry(name.substr(0, sep));
    auto b = find_base_entry(name.substr(sep + 1));
    if (a && b) entry = product_entry(*a, *b);
  } else {
    entry = find_base_entry(name);
  }
  return entry;
}

}  // namespace xmnlab
