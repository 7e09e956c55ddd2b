#include <doctest.h>

#include <array>
#include <random>

#include "oracle.hpp"
#include "xmnlab/catalog.hpp"
#include "xmnlab/group_class.hpp"

using namespace xmnlab;

namespace {

constexpr std::array kAllClasses{ClassId::abelian, ClassId::nilpotent, ClassId::soluble,
                                 ClassId::odd_order, ClassId::fitted_universal};

element_t find(const Group& g, std::string_view cycles) {
  return g.index_of(Permutation::from_cycles(cycles, g.degree()));
}

SubgroupSet gen(const Group& g, std::initializer_list<element_t> seeds) {
  std::vector<element_t> v(seeds);
  return subgroup_closure(g, v);
}

}  // namespace

TEST_CASE("registry thresholds reproduce the bound bases") {
  CHECK(class_registry().size() == 5);
  CHECK(class_spec(ClassId::nilpotent).gamma == Rational(1, 2));
  CHECK(class_spec(ClassId::soluble).gamma == Rational(11, 30));
  CHECK(class_spec(ClassId::odd_order).gamma == Rational(1, 4));
  CHECK(class_spec(ClassId::fitted_universal).gamma == Rational(37, 90));
  CHECK(class_spec(ClassId::abelian).gamma == Rational(5, 8));

  CHECK(class_spec(ClassId::nilpotent).bound_base() == Rational(4));
  CHECK(class_spec(ClassId::soluble).bound_base() == Rational(60, 19));
  CHECK(class_spec(ClassId::odd_order).bound_base() == Rational(8, 3));
  CHECK(class_spec(ClassId::fitted_universal).bound_base() == Rational(180, 53));
  CHECK(class_spec(ClassId::abelian).bound_base() == Rational(16, 3));

  // 37/90 = max(1 - 53/90, 5/18)
  CHECK(class_spec(ClassId::fitted_universal).gamma ==
        std::max(Rational(1) - Rational(53, 90), Rational(5, 18)));

  for (const auto& cls : class_registry()) {
    CHECK(cls.gamma > 0);
    CHECK(cls.gamma < 1);
    CHECK(parse_class_id(cls.name()) == cls.id);
    CHECK_FALSE(cls.provenance.empty());
  }
  CHECK_FALSE(class_spec(ClassId::abelian).closure.extension_closed);
  CHECK_FALSE(parse_class_id("supersoluble").has_value());
}

TEST_CASE("subgroup_closure") {
  const Group a5 = make_alternating(5);
  const SubgroupSet trivial = subgroup_closure(a5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(kIdentity));

  for (element_t x = 0; x < a5.order(); ++x) CHECK(gen(a5, {x}).order() == a5.element_order(x));

  const element_t five = find(a5, "(0 1 2 3 4)");
  const element_t dt = find(a5, "(0 1)(2 3)");
  const SubgroupSet full = gen(a5, {five, dt});
  CHECK(full.order() == 60);
  // the oracle closure of the same pair
  CHECK(oracle::closure({oracle::to_perm(a5.element(five)), oracle::to_perm(a5.element(dt))}, 5).size() == 60);
  // (1 4)(2 3) normalizes <(0 1 2 3 4)>: dihedral of order 10
  CHECK(gen(a5, {five, find(a5, "(1 4)(2 3)")}).order() == 10);

  // closed under the host multiplication and inversion; order divides |G|
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const SubgroupSet h = gen(a5, {static_cast<element_t>(rng() % 60), static_cast<element_t>(rng() % 60)});
    CHECK(60 % h.order() == 0);
    for (element_t a : h.members()) {
      CHECK(h.contains(a5.inv(a)));
      for (element_t b : h.members()) CHECK(h.contains(a5.mult(a, b)));
    }
  }
  CHECK_THROWS_AS(gen(a5, {60}), std::out_of_range);
}

TEST_CASE("derived subgroups") {
  const Group c6 = make_cyclic(6);
  CHECK(derived_subgroup(c6, whole_group(c6)).is_trivial());

  const Group s3 = make_symmetric(3);
  const SubgroupSet d = derived_subgroup(s3, whole_group(s3));
  CHECK(d.order() == 3);
  CHECK(d.contains(find(s3, "(0 1 2)")));

  const Group a5 = make_alternating(5);
  CHECK(derived_subgroup(a5, whole_group(a5)).order() == 60);
}

TEST_CASE("solubility") {
  const Group s4 = make_symmetric(4);
  CHECK(is_soluble(s4, whole_group(s4)));
  CHECK(derived_series_orders(s4, whole_group(s4)) == std::vector<std::size_t>{24, 12, 4, 1});

  const Group a5 = make_alternating(5);
  CHECK_FALSE(is_soluble(a5, whole_group(a5)));
  CHECK(derived_series_orders(a5, whole_group(a5)) == std::vector<std::size_t>{60});

  for (element_t x = 0; x < a5.order(); ++x) CHECK(is_soluble(a5, gen(a5, {x})));
}

TEST_CASE("nilpotency") {
  for (const Group& g : {make_dihedral(8), make_quaternion8(), direct_product(make_cyclic(2), make_cyclic(4)),
                         make_cyclic(9)}) {
    CAPTURE(g.name());
    CHECK(is_nilpotent(g, whole_group(g)));
  }
  const Group s3 = make_symmetric(3);
  CHECK_FALSE(is_nilpotent(s3, whole_group(s3)));
  CHECK(lower_central_series_orders(s3, whole_group(s3)) == std::vector<std::size_t>{6, 3});

  const Group c12 = make_cyclic(12);
  CHECK(is_nilpotent(c12, whole_group(c12)));
}

TEST_CASE("odd order") {
  const Group s3 = make_symmetric(3);
  CHECK(is_odd_order(subgroup_closure(s3, {})));
  CHECK_FALSE(is_odd_order(gen(s3, {find(s3, "(0 1)")})));
  CHECK(is_odd_order(gen(s3, {find(s3, "(0 1 2)")})));
  CHECK_FALSE(is_odd_order(whole_group(s3)));
}

TEST_CASE("pair_in_class examples") {
  for (const Group& g : {make_symmetric(3), make_alternating(5)}) {
    for (ClassId id : kAllClasses) CHECK(pair_in_class(g, kIdentity, kIdentity, class_spec(id)));
  }
  const Group s3 = make_symmetric(3);
  const element_t t1 = find(s3, "(0 1)");
  const element_t t2 = find(s3, "(1 2)");
  CHECK_FALSE(pair_in_class(s3, t1, t2, class_spec(ClassId::nilpotent)));
  CHECK(pair_in_class(s3, t1, t1, class_spec(ClassId::abelian)));
  CHECK(pair_in_class(s3, t1, t2, class_spec(ClassId::soluble)));
}

TEST_CASE("class predicates over the small catalog") {
  for (const auto& entry : catalog_scan(24)) {
    const Group g = build_entry(entry);
    CAPTURE(g.name());
    const auto n = static_cast<element_t>(g.order());
    std::vector<PairClassifier> classifiers;
    for (ClassId id : kAllClasses) classifiers.emplace_back(g, id);

    for (element_t x = 0; x < n; ++x) {
      for (element_t y = 0; y < n; ++y) {
        std::array<bool, 5> v{};
        for (std::size_t c = 0; c < kAllClasses.size(); ++c) {
          v[c] = pair_in_class(g, x, y, class_spec(kAllClasses[c]));
          CHECK(v[c] == pair_in_class(g, y, x, class_spec(kAllClasses[c])));
          CHECK(v[c] == classifiers[c](x, y));
        }
        // abelian => nilpotent => soluble
        if (v[0]) CHECK(v[1]);
        if (v[1]) CHECK(v[2]);
        CHECK(v[4] == v[2]);
      }
      CHECK(pair_in_class(g, x, x, class_spec(ClassId::abelian)));
      CHECK(pair_in_class(g, x, x, class_spec(ClassId::nilpotent)));
      CHECK(pair_in_class(g, x, x, class_spec(ClassId::soluble)));
      CHECK(pair_in_class(g, x, x, class_spec(ClassId::odd_order)) == (g.element_order(x) % 2 == 1));
    }
  }
}

TEST_CASE("pair classification is invariant under conjugation") {
  std::mt19937_64 rng(17);
  for (const Group& g : {make_symmetric(4), make_sl2_3(), make_alternating(5)}) {
    const auto n = static_cast<element_t>(g.order());
    for (int t = 0; t < 300; ++t) {
      const element_t x = rng() % n, y = rng() % n, c = rng() % n;
      const element_t cx = g.mult(g.mult(g.inv(c), x), c);
      const element_t cy = g.mult(g.mult(g.inv(c), y), c);
      for (ClassId id : kAllClasses) {
        CHECK(pair_in_class(g, x, y, class_spec(id)) == pair_in_class(g, cx, cy, class_spec(id)));
      }
    }
  }
}

TEST_CASE("series decrease strictly and match the oracle") {
  for (const auto& entry : catalog_scan(24)) {
    const Group g = build_entry(entry);
    CAPTURE(g.name());
    for (element_t x = 0; x < g.order(); x += 3) {
      for (element_t y = x; y < g.order(); y += 5) {
        const SubgroupSet h = gen(g, {x, y});
        for (const auto& series : {derived_series_orders(g, h), lower_central_series_orders(g, h)}) {
          for (std::size_t i = 1; i < series.size(); ++i) {
            CHECK(series[i] < series[i - 1]);
            CHECK(series[i - 1] % series[i] == 0);
          }
        }
        oracle::PermSet ref;
        for (element_t e : h.members()) ref.insert(oracle::to_perm(g.element(e)));
        CHECK(ref == oracle::closure({oracle::to_perm(g.element(x)), oracle::to_perm(g.element(y))}, g.degree()));
        CHECK(is_soluble(g, h) == oracle::soluble(ref, g.degree()));
        CHECK(is_nilpotent(g, h) == oracle::nilpotent(ref, g.degree()));
        CHECK(is_abelian(g, h) == oracle::abelian(ref));
      }
    }
  }
}
