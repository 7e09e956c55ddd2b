#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "oracle.hpp"
#include "xmnlab/catalog.hpp"
#include "xmnlab/group.hpp"
#include "xmnlab/group_io.hpp"
#include "xmnlab/permutation.hpp"

using namespace xmnlab;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) {
  return Permutation::from_cycles(text, degree);
}

Permutation random_perm(std::mt19937_64& rng, std::size_t degree) {
  std::vector<point_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<point_t>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

void check_group_tables(const Group& g) {
  const std::size_t n = g.order();
  CHECK(g.element(kIdentity).is_identity());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = static_cast<element_t>(i);
    CHECK(g.mult(kIdentity, ei) == ei);
    CHECK(g.mult(ei, kIdentity) == ei);
    CHECK(g.mult(ei, g.inv(ei)) == kIdentity);
    std::vector<bool> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[g.mult(ei, static_cast<element_t>(j))] = true;
      col[g.mult(static_cast<element_t>(j), ei)] = true;
    }
    CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
    CHECK(std::all_of(col.begin(), col.end(), [](bool b) { return b; }));
  }
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  CHECK(std::adjacent_find(g.elements().begin(), g.elements().end()) == g.elements().end());
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const Permutation p = cyc("(0 1 2)", 3);
  CHECK(compose(Permutation(3), p) == p);
  CHECK(compose(cyc("(0 1)", 2), cyc("(0 1)", 2)).is_identity());
  CHECK(compose(p, p) == cyc("(0 2 1)", 3));
  // (0 1) then (1 2): 0 -> 1 -> 2
  CHECK(compose(cyc("(1 2)", 3), cyc("(0 1)", 3))[0] == 2);
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), std::invalid_argument);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation(std::vector<point_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<point_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<point_t>{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::size_t{0}), std::invalid_argument);
  CHECK_NOTHROW(Permutation(std::vector<point_t>{1, 0}));
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
  CHECK(perm_order(Permutation(4)) == 1);
  CHECK(perm_order(cyc("(0 1)(2 3 4)", 5)) == 6);
  CHECK(perm_order(cyc("(0 1 2 3 4)", 5)) == 5);
}

TEST_CASE("cycle notation parsing") {
  CHECK(cyc("", 3).is_identity());
  CHECK(cyc("()", 3).is_identity());
  CHECK(cyc("(0 1 2)(3 4)", 5).to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(cyc(" ( 0, 1 ) ", 2) == Permutation(std::vector<point_t>{1, 0}));
  CHECK_THROWS_AS(cyc("(0 5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(cyc("(0 1)(1 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(cyc("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(cyc("0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(cyc("(a)", 3), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 9;
    const Permutation p = random_perm(rng, d);
    CHECK(Permutation::from_cycles(p.to_cycle_string(), d) == p);
    CHECK(compose(p, p.inverse()).is_identity());
  }
}

TEST_CASE("group_from_generators examples") {
  const Group trivial = group_from_generators({}, "1");
  CHECK(trivial.order() == 1);
  CHECK(trivial.degree() == 1);

  const Group a5 = group_from_generators({cyc("(0 1 2 3 4)", 5), cyc("(0 1 2)", 5)}, "A5");
  CHECK(a5.order() == 60);

  const Group s3 = group_from_generators({cyc("(0 1)", 3), cyc("(0 1 2)", 3)}, "S3");
  CHECK(s3.order() == 6);
  // the oracle closure agrees element for element
  const auto ref = oracle::closure({oracle::to_perm(cyc("(0 1)", 3)), oracle::to_perm(cyc("(0 1 2)", 3))}, 3);
  REQUIRE(ref.size() == s3.order());
  std::size_t i = 0;
  for (const auto& p : ref) CHECK(oracle::to_perm(s3.element(static_cast<element_t>(i++))) == p);
}

TEST_CASE("group_from_generators errors") {
  try {
    group_from_generators({cyc("(0 1)", 5), cyc("(0 1 2 3 4)", 5)}, "S5", 100);
    FAIL("expected the order cap to trigger");
  } catch (const LimitError& e) {
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  CHECK_THROWS_AS(group_from_generators({cyc("(0 1)", 2), cyc("(0 1)", 3)}, "mixed"),
                  std::invalid_argument);
}

TEST_CASE("group table invariants") {
  for (const Group& g : {make_symmetric(4), make_alternating(5), make_dihedral(7), make_quaternion8(),
                         make_sl2_3(), make_frobenius20(), make_cyclic(1),
                         direct_product(make_symmetric(3), make_cyclic(4))}) {
    CAPTURE(g.name());
    check_group_tables(g);
  }
}

TEST_CASE("mult agrees with composing the permutations") {
  const Group g = make_sl2_3();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      const auto prod = oracle::compose(oracle::to_perm(g.element(static_cast<element_t>(i))),
                                        oracle::to_perm(g.element(static_cast<element_t>(j))));
      CHECK(oracle::to_perm(g.element(g.mult(static_cast<element_t>(i), static_cast<element_t>(j)))) == prod);
    }
  }
}

TEST_CASE("associativity spot check and Lagrange for element orders") {
  std::mt19937_64 rng(5);
  for (const Group& g : {make_symmetric(5), make_sl2_3(), make_dihedral(12)}) {
    const auto n = static_cast<element_t>(g.order());
    for (int t = 0; t < 2000; ++t) {
      const element_t i = rng() % n, j = rng() % n, k = rng() % n;
      CHECK(g.mult(g.mult(i, j), k) == g.mult(i, g.mult(j, k)));
    }
    for (element_t e = 0; e < n; ++e) {
      CHECK(g.order() % perm_order(g.element(e)) == 0);
      CHECK(g.element_order(e) == perm_order(g.element(e)));
    }
  }
}

TEST_CASE("canonical ordering ignores generator order and rebuilding is idempotent") {
  const Group a = group_from_generators({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}, "S4");
  const Group b = group_from_generators({cyc("(0 1 2 3)", 4), cyc("(0 1)", 4)}, "S4");
  CHECK(a.elements() == b.elements());

  const Group rebuilt = group_from_generators(a.elements(), "S4 again");
  CHECK(rebuilt.elements() == a.elements());
  for (element_t i = 0; i < a.order(); ++i) {
    CHECK(rebuilt.inv(i) == a.inv(i));
    for (element_t j = 0; j < a.order(); ++j) CHECK(rebuilt.mult(i, j) == a.mult(i, j));
  }
  CHECK(a.index_of(cyc("(0 1)", 4)) < a.order());
  CHECK_THROWS_AS(make_alternating(4).index_of(cyc("(0 1)", 4)), std::out_of_range);
}

TEST_CASE("group JSON input") {
  const Group from_arrays = group_from_json(nlohmann::json::parse(
      R"j({"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})j"));
  CHECK(from_arrays.order() == 6);
  CHECK(from_arrays.name() == "S3");

  const Group from_cycles = group_from_json(nlohmann::json::parse(
      R"j({"name": "A5", "degree": 5, "generators": ["(0 1 2 3 4)", "(0 1 2)"]})j"));
  CHECK(from_cycles.order() == 60);

  const Group no_gens = group_from_json(nlohmann::json::parse(R"j({"degree": 4, "generators": []})j"));
  CHECK(no_gens.order() == 1);
  CHECK(no_gens.degree() == 4);

  CHECK(group_from_json(group_to_json(from_arrays)).elements() == from_arrays.elements());

  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"j({"generators": []})j")), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"j({"degree": 3, "generators": [[0, 1]]})j")),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"j({"degree": 3, "generators": [5]})j")),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"j({"degree": 3, "generators": [[0, 0, 1]]})j")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_group_file("/nonexistent/group.json"), std::invalid_argument);
}

TEST_CASE("XMNLAB_ORDER_CAP overrides the default cap") {
  ::setenv("XMNLAB_ORDER_CAP", "50", 1);
  CHECK(default_order_cap() == 50);
  CHECK_THROWS_AS(make_alternating(5, default_order_cap()), LimitError);
  ::setenv("XMNLAB_ORDER_CAP", "junk", 1);
  CHECK(default_order_cap() == kDefaultOrderCap);
  ::unsetenv("XMNLAB_ORDER_CAP");
  CHECK(default_order_cap() == kDefaultOrderCap);
}
