#include <doctest.h>

#include <cmath>
#include <random>

#include "xmnlab/catalog.hpp"
#include "xmnlab/kst_bounds.hpp"

using namespace xmnlab;

TEST_CASE("kst_compare examples") {
  CHECK(kst_compare({0, 1, 1, 0}) == KstSide::below);
  CHECK(kst_compare({0, 2, 3, 0}) == KstSide::below);

  // m = 1 reduces to 2 eta vs (n-1) t
  CHECK(kst_compare({4, 1, 2, 2}) == KstSide::equal);
  CHECK(kst_compare({4, 1, 2, 3}) == KstSide::above);
  CHECK(kst_compare({4, 1, 2, 1}) == KstSide::below);
  // n = 1 asks only for an edge-free graph to stay below
  CHECK(kst_compare({5, 1, 1, 0}) == KstSide::below);
  CHECK(kst_compare({5, 1, 1, 1}) == KstSide::above);

  // 4-cycle, K_{2,2}: L = 8 - 4 = 4, 16 < 64
  CHECK(kst_compare({4, 2, 2, 4}) == KstSide::below);
  // K4: L = 8, 64 = 64
  CHECK(kst_compare({4, 2, 2, 6}) == KstSide::equal);
  CHECK_FALSE(kst_threshold_exceeded({4, 2, 2, 6}, true));
  CHECK(kst_threshold_exceeded({4, 2, 2, 6}, false));
  // triangle, K_{2,2}: 9 < 27
  CHECK(kst_compare({3, 2, 2, 3}) == KstSide::below);
}

TEST_CASE("validate rejects malformed queries") {
  CHECK_THROWS_AS(validate({4, 0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate({4, 3, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate({4, 1, 2, 7}), std::invalid_argument);
  CHECK_THROWS_AS(kst_compare({1, 1, 1, 1}), std::invalid_argument);
  CHECK_NOTHROW(validate({4, 1, 2, 6}));
  CHECK_NOTHROW(validate({0, 1, 1, 0}));
}

TEST_CASE("floating threshold agrees with the exact comparison away from equality") {
  for (std::uint64_t t = 1; t <= 30; ++t) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      for (std::uint64_t n = m; n <= 4; ++n) {
        const double twice = kst_threshold_twice_edges(t, m, n);
        for (std::uint64_t eta = 0; eta <= t * (t - 1) / 2; ++eta) {
          const KstSide side = kst_compare({t, m, n, eta});
          const double gap = 2.0 * static_cast<double>(eta) - twice;
          if (std::abs(gap) < 1e-9 * (1 + twice)) continue;
          CAPTURE(t);
          CAPTURE(eta);
          CHECK((gap > 0) == (side == KstSide::above));
        }
      }
    }
  }
}

TEST_CASE("theorem_bound values") {
  CHECK(theorem_bound(class_spec(ClassId::nilpotent), 3, 2) == Rational(64));
  CHECK(theorem_bound(class_spec(ClassId::soluble), 1, 2) == Rational(60, 19));
  CHECK(theorem_bound(class_spec(ClassId::fitted_universal), 1, 2) == Rational(180, 53));
  CHECK(theorem_bound(class_spec(ClassId::abelian), 1, 5) == Rational(64, 3));
  CHECK(theorem_bound(class_spec(ClassId::odd_order), 2, 1) == Rational(0));
  CHECK(theorem_bound(Rational(1, 2), 2, 4) == Rational(48));
  CHECK_THROWS_AS(theorem_bound(Rational(1, 2), 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(theorem_bound(Rational(1, 2), 1, 0), std::invalid_argument);
}

TEST_CASE("verify_group examples") {
  const Group c6 = make_cyclic(6);
  const GroupVerification vac = verify_group(c6, class_spec(ClassId::nilpotent));
  CHECK(vac.vacuous);
  CHECK(vac.checks.empty());
  CHECK_FALSE(vac.has_violation());
  CHECK(vac.probability == 1);

  const Group s3 = make_symmetric(3);
  const GroupVerification ab = verify_group(s3, class_spec(ClassId::abelian));
  CHECK_FALSE(ab.vacuous);
  CHECK(ab.threshold_ok);
  REQUIRE(ab.checks.size() == 3);
  CHECK(ab.checks[0].n_star == 5);
  CHECK(ab.checks[0].bound == Rational(64, 3));
  CHECK(ab.checks[0].holds);
  CHECK_FALSE(ab.checks[0].corollary_applies);
  CHECK_FALSE(ab.has_violation());

  const Group a5 = make_alternating(5);
  const GroupVerification sol = verify_group(a5, class_spec(ClassId::soluble));
  REQUIRE(sol.checks.size() == 3);
  for (const auto& c : sol.checks) {
    CHECK(c.n_star == 51);
    CHECK(c.bound == pow(Rational(60, 19), c.m) * 50);
    CHECK(c.holds);
    CHECK(c.corollary_applies);
    CHECK(c.corollary_holds);
  }
  CHECK(sol.eta == 1140);

  VerifyOptions narrow;
  narrow.m_min = 2;
  narrow.m_max = 2;
  const GroupVerification one = verify_group(a5, class_spec(ClassId::odd_order), narrow);
  REQUIRE(one.checks.size() == 1);
  CHECK(one.checks[0].m == 2);
  CHECK(one.checks[0].n_star == 61);
}

TEST_CASE("the m cap stops the search with a report") {
  VerifyOptions opts;
  opts.m_max = 5;
  opts.m_cap = 2;
  const GroupVerification v = verify_group(make_symmetric(4), class_spec(ClassId::nilpotent), opts);
  CHECK(v.checks.size() == 2);
  REQUIRE(v.limited_at_m.has_value());
  CHECK(*v.limited_at_m == 3);

  // m beyond |G| ends the loop without a cap report
  opts.m_max = 8;
  opts.m_cap = 10;
  const GroupVerification small = verify_group(make_symmetric(3), class_spec(ClassId::nilpotent), opts);
  CHECK(small.checks.size() == 6);
  CHECK_FALSE(small.limited_at_m.has_value());
}

TEST_CASE("chain diagnostics are consistent over the order <= 60 catalog") {
  for (const auto& entry : catalog_scan(60)) {
    const Group g = build_entry(entry);
    for (const auto& cls : class_registry()) {
      const GroupVerification v = verify_group(g, cls);
      CAPTURE(g.name());
      CAPTURE(cls.name());
      CHECK(v.threshold_ok);
      for (const auto& c : v.checks) {
        CAPTURE(c.m);
        CHECK(c.holds);
        CHECK(c.m_le_n);
        CHECK(c.chain.loop_identity);
        CHECK(c.chain.ineq1_corrected.holds);
        CHECK(c.chain.kmn_free);
        // K_{m,n}-free graphs cannot sit strictly above the threshold
        CHECK(c.chain.ineq2.holds);
        if (c.chain.ineq1_corrected.holds && c.chain.ineq2.holds) CHECK(c.chain.ineq3_corrected.holds);
        CHECK(c.chain.order_at_least_n_minus_1);
        CHECK(c.chain.ineq4.holds == c.holds);
        if (cls.id != ClassId::odd_order) CHECK(c.chain.ineq1_printed.holds == c.chain.ineq1_corrected.holds);
        if (c.corollary_applies) CHECK(c.corollary_holds);
      }
    }
  }
}

TEST_CASE("trial seeds are distinct and stable") {
  CHECK(trial_seed(42, 0) == trial_seed(42, 0));
  CHECK(trial_seed(42, 0) != trial_seed(42, 1));
  CHECK(trial_seed(42, 0) != trial_seed(43, 0));
}

TEST_CASE("random graphs past the threshold contain K_{m,n}") {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 2}, {2, 3}}) {
    KstTestConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.trials = 200;
    cfg.seed = 1234;
    const KstTestSummary s = kst_random_property_test(cfg);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(s.graphs == 200);
    CHECK(s.violations == 0);
    CHECK(s.witnessed == s.exceeded);
    CHECK(s.exceeded > 0);
    CHECK(s.exceeded < s.graphs);

    const KstTestSummary again = kst_random_property_test(cfg);
    CHECK(again.exceeded == s.exceeded);
    CHECK(again.below_with_kmn == s.below_with_kmn);
  }

  KstTestConfig bad;
  bad.m = 3;
  bad.n = 2;
  CHECK_THROWS_AS(kst_random_property_test(bad), std::invalid_argument);
  bad = {};
  bad.t_max = 1;
  CHECK_THROWS_AS(kst_random_property_test(bad), std::invalid_argument);
}

TEST_CASE("m = 1 matches the degree pigeonhole") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 2 + rng() % 20;
    const std::size_t n = 1 + rng() % 4;
    SimpleGraph g(t);
    const double density = static_cast<double>(rng() % 1000) / 1000.0;
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) g.add_edge(a, b);
      }
    }
    std::size_t max_degree = 0;
    for (const auto& row : g.adjacency) max_degree = std::max(max_degree, row.count());
    const bool above = kst_threshold_exceeded({t, 1, n, g.edge_count()}, true);
    if (above) CHECK(max_degree >= n);
    CHECK(contains_kmn(g, 1, n).has_value() == (max_degree >= n));
  }
}

TEST_CASE("complete graphs") {
  for (std::size_t t = 2; t <= 12; ++t) {
    SimpleGraph g(t);
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) g.add_edge(a, b);
    }
    for (std::size_t m = 1; m <= 2; ++m) {
      for (std::size_t n = m; n <= 3; ++n) {
        const bool fits = m + n <= t;
        CHECK(contains_kmn(g, m, n).has_value() == fits);
        if (kst_threshold_exceeded({t, m, n, g.edge_count()}, true)) CHECK(fits);
      }
    }
  }
}
